from algebra.cartan_roots import find_cartan, identify_type, root_decomposition
from algebra.serializers import TypeLabelSerializer

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = 'Dynkin type of a semisimple algebra, e.g. type --fixture C2.sl3 -> "A2"'

    def compute(self, options):
        L = self.presentation()
        label = identify_type(root_decomposition(L, find_cartan(L, seed=options["seed"])))
        return TypeLabelSerializer(label).data

    def human(self, data):
        return [data["label"]]
