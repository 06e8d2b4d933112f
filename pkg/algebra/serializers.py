from rest_framework import serializers

from .dsl import format_field, format_function, parse_field, parse_fields
from .liepresent import LiePresentation
from .utils.scalars import format_scalar


def scalars(values):
    return [format_scalar(c) for c in values]


class VectorFieldField(serializers.Field):
    """Vector field as a DSL string; parsing needs N from the serializer context"""

    def to_representation(self, value):
        return format_field(value)

    def to_internal_value(self, data):
        return parse_field(str(data), self.context["N"])


# requests


class FieldsRequestSerializer(serializers.Serializer):
    """Input shared by the field-list endpoints: ambient dimension plus DSL strings"""
    N = serializers.IntegerField(min_value=1)
    fields = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    seed = serializers.IntegerField(required=False, min_value=0)

    def validate(self, data):
        # ParseError propagates so the view can report line and column
        data["vector_fields"] = parse_fields("\n".join(data["fields"]), data["N"])
        return data


class BracketRequestSerializer(serializers.Serializer):
    N = serializers.IntegerField(min_value=1)
    left = serializers.CharField()
    right = serializers.CharField()

    def validate(self, data):
        data["left_field"] = parse_field(data["left"], data["N"])
        data["right_field"] = parse_field(data["right"], data["N"])
        return data


# results


class StructureSerializer(serializers.Serializer):
    """Structure constants: the dense sc[i][j][k] table plus a sparse bracket list over basis labels"""
    dim = serializers.IntegerField(read_only=True)
    labels = serializers.ListField(child=serializers.CharField(), read_only=True)
    sc = serializers.SerializerMethodField()
    brackets = serializers.SerializerMethodField()

    def get_sc(self, obj):
        return [[[format_scalar(c) for c in vec] for vec in plane] for plane in obj.sc]

    def get_brackets(self, obj):
        out = []
        for (i, j), row in sorted(obj.table.items()):
            if i < j:
                out.append({
                    "left": obj.labels[i],
                    "right": obj.labels[j],
                    "value": {obj.labels[k]: format_scalar(c) for k, c in sorted(row.items())},
                })
        return out


class PresentationSerializer(StructureSerializer):
    N = serializers.IntegerField(source="ambient_dim", read_only=True)
    basis = serializers.ListField(child=VectorFieldField(), read_only=True)


def structure_data(L):
    serializer = PresentationSerializer if isinstance(L, LiePresentation) else StructureSerializer
    return serializer(L).data


class FlagsSerializer(serializers.Serializer):
    abelian = serializers.BooleanField()
    nilpotent = serializers.BooleanField()
    solvable = serializers.BooleanField()
    semisimple = serializers.BooleanField()


class SubspaceSerializer(serializers.Serializer):
    dim = serializers.IntegerField(read_only=True)
    rows = serializers.SerializerMethodField()
    # get_fields is taken by Serializer itself
    fields = serializers.SerializerMethodField(method_name="get_field_strings")

    def get_rows(self, obj):
        return [scalars(row) for row in obj.rows]

    def get_field_strings(self, obj):
        if not isinstance(obj.parent, LiePresentation):
            return None
        return [format_field(v) for v in obj.fields()]


class CartanDataSerializer(serializers.Serializer):
    rank = serializers.IntegerField(read_only=True)
    regular_element = serializers.SerializerMethodField()
    csa = SubspaceSerializer(read_only=True)

    def get_regular_element(self, obj):
        return scalars(obj.regular_element)


class RootDataSerializer(serializers.Serializer):
    cartan = CartanDataSerializer(read_only=True)
    roots = serializers.SerializerMethodField()
    root_spaces = serializers.SerializerMethodField()

    def get_roots(self, obj):
        return [scalars(root) for root in obj.roots]

    def get_root_spaces(self, obj):
        return [
            {"root": scalars(root), "space": SubspaceSerializer(obj.root_spaces[root]).data}
            for root in obj.roots
        ]


class TypeLabelSerializer(serializers.Serializer):
    label = serializers.SerializerMethodField()
    rank = serializers.IntegerField(read_only=True)
    dimension = serializers.IntegerField(read_only=True)
    factors = serializers.SerializerMethodField()

    def get_label(self, obj):
        return str(obj)

    def get_factors(self, obj):
        return [f"{letter}{n}" for letter, n in obj.factors]


class WitnessSerializer(serializers.Serializer):
    point = serializers.ListField(child=serializers.IntegerField(), read_only=True)
    value = serializers.SerializerMethodField()
    exact = serializers.BooleanField(read_only=True)

    def get_value(self, obj):
        return format_scalar(obj.value) if obj.exact else str(obj.value)


class GeometricRankSerializer(serializers.Serializer):
    rank = serializers.IntegerField(read_only=True)
    certificate = serializers.SerializerMethodField()
    rows = serializers.ListField(child=serializers.IntegerField(), read_only=True)
    cols = serializers.ListField(child=serializers.IntegerField(), read_only=True)

    def get_certificate(self, obj):
        return format_function(obj.certificate)


class RankEqualitySerializer(serializers.Serializer):
    csa_dim = serializers.IntegerField(read_only=True)
    csa_geometric_rank = serializers.IntegerField(read_only=True)
    algebra_dim = serializers.IntegerField(read_only=True)
    algebra_geometric_rank = serializers.IntegerField(read_only=True)
    equal = serializers.BooleanField(read_only=True)
    witness = WitnessSerializer(read_only=True, allow_null=True)


class WeightVectorSerializer(serializers.Serializer):
    field = VectorFieldField(read_only=True)
    weight = serializers.SerializerMethodField()

    def get_weight(self, obj):
        return scalars(obj.weight)


class SolutionFamilySerializer(serializers.Serializer):
    particular = VectorFieldField(read_only=True)
    directions = serializers.ListField(child=VectorFieldField(), read_only=True)
    parameters = serializers.SerializerMethodField()

    def get_parameters(self, obj):
        return [
            {"relation": n, "label": label, "value": format_scalar(c)}
            for (n, label), c in sorted(obj.parameters.items())
        ]


class InfeasibilityReportSerializer(serializers.Serializer):
    stage = serializers.SerializerMethodField()
    unknown_root = serializers.ListField(child=serializers.IntegerField(), read_only=True, allow_null=True)
    relation_index = serializers.IntegerField(read_only=True, allow_null=True)
    residual_field = serializers.SerializerMethodField()
    ansatz = serializers.SerializerMethodField()
    exhaustive = serializers.BooleanField(read_only=True)
    degree_independent = serializers.BooleanField(read_only=True)
    message = serializers.CharField(read_only=True)

    def get_stage(self, obj):
        return obj.stage

    def get_residual_field(self, obj):
        return format_field(obj.residual_field) if obj.residual_field is not None else None

    def get_ansatz(self, obj):
        return obj.ansatz.describe()


class ExtensionOutcomeSerializer(serializers.Serializer):
    feasible = serializers.BooleanField(read_only=True)
    stages = serializers.SerializerMethodField()
    presentation = serializers.SerializerMethodField()
    report = InfeasibilityReportSerializer(read_only=True, allow_null=True)

    def get_stages(self, obj):
        return [list(root) for root in obj.stages]

    def get_presentation(self, obj):
        return structure_data(obj.presentation) if obj.presentation is not None else None


class LeviCheckSerializer(serializers.Serializer):
    name = serializers.CharField(read_only=True)
    passed = serializers.BooleanField(read_only=True)
    detail = serializers.CharField(read_only=True)


class LeviReportSerializer(serializers.Serializer):
    ok = serializers.BooleanField(read_only=True)
    checks = LeviCheckSerializer(many=True, read_only=True)


class FixtureSerializer(serializers.Serializer):
    name = serializers.CharField(read_only=True)
    N = serializers.IntegerField(source="dim", read_only=True)
    description = serializers.CharField(read_only=True)
    fields = serializers.ListField(child=serializers.CharField(), read_only=True)
    expected = serializers.DictField(read_only=True)
    pushforward = serializers.DictField(read_only=True, allow_null=True)
    aliases = serializers.ListField(child=serializers.CharField(), read_only=True)


class FixtureCheckSerializer(serializers.Serializer):
    key = serializers.CharField(read_only=True)
    expected = serializers.JSONField(read_only=True)
    actual = serializers.JSONField(read_only=True)
    passed = serializers.BooleanField(read_only=True)


class FixtureReportSerializer(serializers.Serializer):
    name = serializers.CharField(read_only=True)
    ok = serializers.BooleanField(read_only=True)
    error = serializers.CharField(read_only=True)
    checks = FixtureCheckSerializer(many=True, read_only=True)
