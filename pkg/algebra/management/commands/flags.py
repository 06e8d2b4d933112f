from algebra.liepresent import is_abelian, is_nilpotent, is_semisimple, is_solvable
from algebra.serializers import FlagsSerializer

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Abelian / nilpotent / solvable / semisimple flags"

    def compute(self, options):
        L = self.presentation()
        flags = {
            "abelian": is_abelian(L),
            "nilpotent": is_nilpotent(L),
            "solvable": is_solvable(L),
            "semisimple": is_semisimple(L),
        }
        return FlagsSerializer(flags).data
