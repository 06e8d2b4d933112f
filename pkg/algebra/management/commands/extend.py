from algebra.modsearch import staged_extension_protocol
from algebra.serializers import ExtensionOutcomeSerializer

from ._base import Answer, ToolkitCommand


def parse_embedding(text):
    """'1,0;1,2' -> ((1, 0), (1, 2)): images of the source simple roots."""
    try:
        return tuple(tuple(int(c) for c in chunk.split(",")) for chunk in text.split(";"))
    except ValueError:
        return None


class Command(ToolkitCommand):
    help = "Staged extension of a realized semisimple algebra to a larger type of the same rank"

    def add_command_arguments(self, parser):
        parser.add_argument("--target", required=True, help="target type, e.g. B2 or G2")
        parser.add_argument("--embedding", help="simple-root images, e.g. '1,0;1,2'")

    def compute(self, options):
        embedding = None
        if options["embedding"]:
            embedding = parse_embedding(options["embedding"])
            if embedding is None:
                raise self.usage(f"bad embedding {options['embedding']!r}")
        outcome = staged_extension_protocol(
            self.presentation(), options["target"], embedding=embedding, A=self.ansatz(), seed=options["seed"],
        )
        data = ExtensionOutcomeSerializer(outcome).data
        if not outcome.feasible:
            raise Answer(data, f"no extension to {options['target']}: {outcome.report.message}")
        return data
