from django.test import SimpleTestCase

from .scenarios import (
    catalog_scenario,
    chevalley_scenario,
    levi_scenario,
    line_scenario,
    run_scenarios,
)


class ScenarioTests(SimpleTestCase):
    def test_line_classification(self):
        result = line_scenario(degree=4)
        self.assertTrue(result.passed, result.detail)

    def test_chevalley_constants_small_types(self):
        result = chevalley_scenario(dims=(('A1', 3), ('A2', 8), ('B2', 10)))
        self.assertTrue(result.passed, result.detail)

    def test_levi_decomposition(self):
        result = levi_scenario()
        self.assertTrue(result.passed, result.detail)

    def test_catalog_subset(self):
        result = catalog_scenario('line.*')
        self.assertTrue(result.passed, result.detail)
        self.assertEqual(result.detail, '4 fixtures')

    def test_run_scenarios_filters_by_name(self):
        results = run_scenarios(only=['levi'])
        self.assertEqual(len(results), 1)
        self.assertEqual(results[0].name, 'Levi decomposition')
