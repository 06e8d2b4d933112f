from algebra.linalg import mat_rank, rows_of
from algebra.liepresent import killing_form
from algebra.serializers import scalars

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Killing form K(x, y) = tr(ad x ad y) in the given basis"

    def compute(self, options):
        L = self.presentation()
        K = killing_form(L)
        rank = mat_rank(K)
        return {
            "labels": list(L.labels),
            "matrix": [scalars(row) for row in rows_of(K)],
            "rank": rank,
            "nondegenerate": rank == L.dim,
        }

    def human(self, data):
        lines = ["  ".join(row) for row in data["matrix"]]
        lines.append(f"rank {data['rank']}, {'nondegenerate' if data['nondegenerate'] else 'degenerate'}")
        return lines
