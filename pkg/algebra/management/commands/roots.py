from algebra.cartan_roots import find_cartan, identify_type, root_decomposition
from algebra.serializers import RootDataSerializer

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Root decomposition with respect to a Cartan subalgebra"

    def compute(self, options):
        L = self.presentation()
        R = root_decomposition(L, find_cartan(L, seed=options["seed"]))
        data = dict(RootDataSerializer(R).data)
        data["type"] = str(identify_type(R))
        return data

    def human(self, data):
        lines = [f"type {data['type']}, rank {data['cartan']['rank']}"]
        for entry in data["root_spaces"]:
            lines.append(f"({', '.join(entry['root'])}): {'; '.join(entry['space']['fields'] or [])}")
        return lines
