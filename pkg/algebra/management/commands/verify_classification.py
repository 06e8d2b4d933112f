from algebra.scenarios import SCENARIOS, run_scenarios

from ._base import Answer, ToolkitCommand


class Command(ToolkitCommand):
    help = "Recompute the classification statements the fixtures and type tables encode (verify-paper, spelled verify_classification as a manage.py command)"
    uses_fields = False

    def add_command_arguments(self, parser):
        names = [s.__name__.removesuffix("_scenario") for s in SCENARIOS]
        parser.add_argument("--only", action="append", choices=names, help="run only these scenarios (repeat)")

    def compute(self, options):
        results = run_scenarios(options["only"])
        data = {
            "passed": all(r.passed for r in results),
            "scenarios": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        }
        if not data["passed"]:
            raise Answer(data, "some classification scenarios failed")
        return data

    def human(self, data):
        return [
            f"{'PASS' if s['passed'] else 'FAIL'}  {s['name']}" + (f"  ({s['detail']})" if s["detail"] else "")
            for s in data["scenarios"]
        ]
