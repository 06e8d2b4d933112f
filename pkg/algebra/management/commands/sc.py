from algebra.serializers import structure_data

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Structure constants of the algebra spanned by the given fields"

    def compute(self, options):
        return structure_data(self.presentation())

    def human(self, data):
        lines = [f"X{n + 1} = {field}" for n, field in enumerate(data["basis"])]
        for entry in data["brackets"]:
            terms = " + ".join(f"({c})*{label}" for label, c in entry["value"].items())
            lines.append(f"[{entry['left']}, {entry['right']}] = {terms}")
        return lines
