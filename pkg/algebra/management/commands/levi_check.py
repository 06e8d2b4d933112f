from algebra.liepresent import Subspace, check_levi, coordinates_in, radical
from algebra.serializers import LeviReportSerializer

from ._base import Answer, ToolkitCommand


class Command(ToolkitCommand):
    help = "Verify a Levi decomposition L = S + R given by fields of L (levi-check, spelled levi_check as a manage.py command)"

    def add_command_arguments(self, parser):
        parser.add_argument("--levi", action="append", default=[], metavar="FIELD",
                            help="a field of the semisimple part S (repeat)")
        parser.add_argument("--rad", action="append", default=[], metavar="FIELD",
                            help="a field of the radical R (repeat; default: the computed radical)")

    def compute(self, options):
        L = self.presentation()
        if not options["levi"]:
            raise self.usage("give the semisimple part with --levi FIELD")
        S = Subspace.span(L, [coordinates_in(L, self.parse(text)) for text in options["levi"]])
        if options["rad"]:
            R = Subspace.span(L, [coordinates_in(L, self.parse(text)) for text in options["rad"]])
        else:
            R = radical(L)
        data = LeviReportSerializer(check_levi(L, S, R)).data
        if not data["ok"]:
            raise Answer(data, "Levi decomposition check failed")
        return data
