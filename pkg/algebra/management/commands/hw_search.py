from algebra.modsearch import BorelChoice, borel_from_roots, highest_weight_vectors
from algebra.serializers import WeightVectorSerializer

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Highest-weight vectors of the ansatz modulo the given algebra (hw-search, spelled hw_search as a manage.py command)"

    def add_command_arguments(self, parser):
        parser.add_argument("--cartan", action="append", default=[], metavar="FIELD",
                            help="a Cartan field of the Borel choice (repeat)")
        parser.add_argument("--positive", action="append", default=[], metavar="FIELD",
                            help="a positive root field of the Borel choice (repeat)")

    def compute(self, options):
        L = self.presentation()
        A = self.ansatz()
        if options["cartan"] or options["positive"]:
            borel = BorelChoice(
                tuple(self.parse(text) for text in options["cartan"]),
                tuple(self.parse(text) for text in options["positive"]),
            )
        else:
            borel = borel_from_roots(L, A=A)
        found = highest_weight_vectors(L, borel, A)
        return {
            "ansatz": A.describe(),
            "count": len(found),
            "vectors": WeightVectorSerializer(found, many=True).data,
        }

    def human(self, data):
        if not data["count"]:
            return [f"no highest-weight vectors in {data['ansatz']}"]
        return [f"({', '.join(v['weight'])}): {v['field']}" for v in data["vectors"]]
