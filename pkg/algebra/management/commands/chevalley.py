from algebra.cartan_roots import chevalley_basis, chevalley_constants, find_cartan
from algebra.serializers import structure_data

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Chevalley basis of the given fields, or the constants of a type with --type"

    def add_command_arguments(self, parser):
        parser.add_argument("--type", dest="type_label", help="a supported type label, e.g. G2")

    def compute(self, options):
        if options["type_label"]:
            if options["fields"] or options["fixture"]:
                raise self.usage("give either --type or fields, not both")
            return structure_data(chevalley_constants(options["type_label"]))
        L = self.presentation()
        return structure_data(chevalley_basis(L, find_cartan(L, seed=options["seed"])))
