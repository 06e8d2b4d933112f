from algebra.dsl import format_field

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = 'Lie bracket [V, W] of two vector fields, e.g. bracket -N 1 "Dx" "x^2*Dx"'

    def compute(self, options):
        fields = self.vector_fields()
        if len(fields) != 2:
            raise self.usage("bracket takes exactly two fields")
        V, W = fields
        return {"N": V.dim, "bracket": format_field(V.bracket(W))}

    def human(self, data):
        return [data["bracket"]]
