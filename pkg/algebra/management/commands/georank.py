from algebra.errors import NoExactWitness
from algebra.georank import geometric_rank, rank_equality_report, witness_point
from algebra.serializers import GeometricRankSerializer, RankEqualitySerializer, WitnessSerializer

from ._base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Geometric rank with a certificate minor and a witness point"

    def add_command_arguments(self, parser):
        parser.add_argument("--box", type=int, help="half-width of the integer witness search box")
        parser.add_argument("--equality", action="store_true",
                            help="compare the CSA dimension with the geometric rank of the CSA")

    def compute(self, options):
        seed = options["seed"]
        if options["equality"]:
            report = rank_equality_report(self.presentation(), seed=seed)
            return RankEqualitySerializer(report).data
        result = geometric_rank(self.vector_fields(), seed=seed)
        data = dict(GeometricRankSerializer(result).data)
        data["witness"] = None
        if result.rank:
            try:
                witness = witness_point(result.certificate, box=options["box"], precision=self.precision())
                data["witness"] = WitnessSerializer(witness).data
            except NoExactWitness as exc:
                data["witness_note"] = str(exc)
        return data

    def human(self, data):
        if "csa_dim" in data:
            verdict = "equal" if data["equal"] else "NOT equal"
            return [f"CSA dimension {data['csa_dim']}, geometric rank of the CSA {data['csa_geometric_rank']}: {verdict}"]
        lines = [f"rank {data['rank']}", f"certificate {data['certificate']}"]
        witness = data["witness"]
        if witness:
            kind = "exact" if witness["exact"] else "approximate"
            lines.append(f"witness ({', '.join(map(str, witness['point']))}) -> {witness['value']} ({kind})")
        elif "witness_note" in data:
            lines.append(f"no witness: {data['witness_note']}")
        return lines
