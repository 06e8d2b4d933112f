from django.test import SimpleTestCase

from .errors import UnrecognizedDiagram, UnsupportedType
from .rootsystems import (
    TypeLabel,
    block_diagonal,
    cartan_matrix,
    enumerate_types_up_to_rank,
    positive_roots,
    rank_dim_table,
    type_of_cartan,
)


class TypeLabelTests(SimpleTestCase):
    def test_factors_are_sorted(self):
        self.assertEqual(str(TypeLabel.parse('A2xA1')), 'A1xA2')
        self.assertEqual(TypeLabel.parse('A2 x A1'), TypeLabel.parse('A1xA2'))

    def test_low_rank_coincidences(self):
        self.assertEqual(str(TypeLabel.parse('C2')), 'B2')
        self.assertEqual(str(TypeLabel.parse('D3')), 'A3')
        self.assertEqual(str(TypeLabel.parse('B1')), 'A1')
        self.assertEqual(str(TypeLabel.parse('D2')), 'A1xA1')

    def test_illegal_labels(self):
        for text in ('E5', 'G3', 'Z2', '', 'A0'):
            with self.assertRaises(UnsupportedType):
                TypeLabel.parse(text)

    def test_rank_and_dimension(self):
        self.assertEqual(rank_dim_table('G2'), (2, 14))
        self.assertEqual(rank_dim_table('A1xA2'), (3, 11))
        self.assertEqual(rank_dim_table('E8'), (8, 248))
        self.assertEqual(rank_dim_table('F4'), (4, 52))
        self.assertEqual(rank_dim_table('C3'), (3, 21))

    def test_enumeration_up_to_rank_two(self):
        self.assertEqual([str(t) for t in enumerate_types_up_to_rank(2)], ['A1', 'A1xA1', 'A2', 'B2', 'G2'])

    def test_enumeration_up_to_rank_three(self):
        labels = [str(t) for t in enumerate_types_up_to_rank(3)]
        self.assertEqual(len(labels), 12)
        for label in ('A3', 'B3', 'C3', 'A1xA1xA1', 'A1xA2', 'A1xB2', 'A1xG2'):
            self.assertIn(label, labels)


class CartanMatrixTests(SimpleTestCase):
    def test_small_matrices(self):
        self.assertEqual(cartan_matrix('A', 2), ((2, -1), (-1, 2)))
        self.assertEqual(cartan_matrix('B', 2), ((2, -1), (-2, 2)))
        self.assertEqual(cartan_matrix('G', 2), ((2, -3), (-1, 2)))

    def test_positive_root_counts(self):
        counts = {('A', 2): 3, ('B', 2): 4, ('G', 2): 6, ('A', 3): 6, ('B', 3): 9,
                  ('C', 3): 9, ('D', 4): 12, ('F', 4): 24, ('E', 6): 36}
        for (letter, n), count in counts.items():
            self.assertEqual(len(positive_roots(cartan_matrix(letter, n))), count, f"{letter}{n}")

    def test_g2_highest_root(self):
        self.assertEqual(positive_roots(cartan_matrix('G', 2))[-1], (3, 2))

    def test_roots_sorted_by_height(self):
        heights = [sum(r) for r in positive_roots(cartan_matrix('B', 3))]
        self.assertEqual(heights, sorted(heights))


class DiagramRecognitionTests(SimpleTestCase):
    def test_products(self):
        cartan = block_diagonal([cartan_matrix('A', 2), cartan_matrix('A', 1)])
        self.assertEqual(str(type_of_cartan(cartan)), 'A1xA2')

    def test_reordered_nodes(self):
        self.assertEqual(str(type_of_cartan(((2, -2), (-1, 2)))), 'B2')
        self.assertEqual(str(type_of_cartan(((2, -1), (-3, 2)))), 'G2')

    def test_affine_diagram_rejected(self):
        with self.assertRaises(UnrecognizedDiagram):
            type_of_cartan(((2, -2), (-2, 2)))
