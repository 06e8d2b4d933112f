from algebra.liepresent import radical
from algebra.serializers import SubspaceSerializer

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Solvable radical (Killing-orthogonal of [L, L])"

    def compute(self, options):
        return SubspaceSerializer(radical(self.presentation())).data

    def human(self, data):
        return [f"dim {data['dim']}", *data["fields"]]
