from algebra.cartan_roots import find_cartan
from algebra.serializers import CartanDataSerializer

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "A Cartan subalgebra (generalized null space of a regular element)"

    def add_command_arguments(self, parser):
        parser.add_argument("--trials", type=int, help="number of random regular-element candidates")

    def compute(self, options):
        C = find_cartan(self.presentation(), seed=options["seed"], trials=options["trials"])
        return CartanDataSerializer(C).data
