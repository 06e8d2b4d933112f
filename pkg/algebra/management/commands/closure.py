from algebra.dsl import format_field
from algebra.errors import NotClosed
from algebra.liepresent import closure_check

from ._base import Answer, ToolkitCommand


class Command(ToolkitCommand):
    help = "Check that the span of the given fields is closed under the bracket"

    def compute(self, options):
        fields = self.vector_fields()
        try:
            L = closure_check(fields)
        except NotClosed as exc:
            data = {
                "closed": False,
                "i": exc.i + 1,
                "j": exc.j + 1,
                "residual": format_field(exc.residual),
            }
            raise Answer(data, f"bracket of fields {exc.i + 1} and {exc.j + 1} leaves the span")
        return {"closed": True, "N": L.ambient_dim, "dim": L.dim, "labels": list(L.labels)}
