import logging

from rest_framework import status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from .catalog import fixture, list_fixtures
from .cartan_roots import find_cartan, identify_type, root_decomposition
from .dsl import format_field
from .errors import EXIT_INTERNAL, EXIT_NEGATIVE, LieToolkitError, NotClosed, UnknownFixture
from .georank import geometric_rank, witness_point
from .liepresent import closure_check, is_abelian, is_nilpotent, is_semisimple, is_solvable
from .serializers import (
    BracketRequestSerializer,
    FieldsRequestSerializer,
    FixtureSerializer,
    FlagsSerializer,
    GeometricRankSerializer,
    TypeLabelSerializer,
    WitnessSerializer,
    structure_data,
)
from .vfields import VectorField

logger = logging.getLogger(__name__)


def error_response(exc: LieToolkitError):
    """400 for usage and parse errors, 422 for mathematical negatives, 500 for internal failures."""
    body = exc.as_dict()
    if isinstance(exc, NotClosed):
        residual = format_field(exc.residual) if isinstance(exc.residual, VectorField) else None
        body.update({"i": exc.i + 1, "j": exc.j + 1, "residual": residual})
    if exc.exit_code == EXIT_NEGATIVE:
        code = status.HTTP_422_UNPROCESSABLE_ENTITY
    elif exc.exit_code == EXIT_INTERNAL:
        logger.error(f"internal error: {exc}")
        code = status.HTTP_500_INTERNAL_SERVER_ERROR
    else:
        code = status.HTTP_400_BAD_REQUEST
    return Response(body, status=code)


class ToolkitView(APIView):
    """Base for the computation endpoints: validate, compute, map toolkit errors to status codes"""
    permission_classes = (AllowAny,)
    request_serializer = FieldsRequestSerializer

    def post(self, request):
        try:
            serializer = self.request_serializer(data=request.data)
            if not serializer.is_valid():
                return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
            return Response(self.compute(serializer.validated_data), status=status.HTTP_200_OK)
        except LieToolkitError as exc:
            return error_response(exc)

    def compute(self, data):
        raise NotImplementedError


class HomeView(APIView):
    """API index"""
    permission_classes = (AllowAny,)

    def get(self, request):
        return Response({
            "message": "liefields: exact Lie algebras of vector fields",
            "version": "1.0.0",
            "docs": {
                "api": "/docs/API.md",
                "cli": "/docs/CLI.md",
                "fixtures": "/docs/FIXTURES.md",
            },
            "endpoints": {
                "fixtures": "GET /api/fixtures/",
                "fixture": "GET /api/fixtures/<name>/",
                "bracket": "POST /api/bracket/",
                "closure": "POST /api/closure/",
                "georank": "POST /api/georank/",
                "type": "POST /api/type/",
            },
        }, status=status.HTTP_200_OK)


class FixtureListView(APIView):
    permission_classes = (AllowAny,)

    def get(self, request):
        pattern = request.query_params.get("pattern")
        names = list_fixtures(pattern)
        return Response({"count": len(names), "fixtures": names}, status=status.HTTP_200_OK)


class FixtureDetailView(APIView):
    """A shipped fixture, verified before it is returned"""
    permission_classes = (AllowAny,)

    def get(self, request, name):
        try:
            fix = fixture(name)
        except UnknownFixture as exc:
            return Response(exc.as_dict(), status=status.HTTP_404_NOT_FOUND)
        except LieToolkitError as exc:
            return error_response(exc)
        return Response(FixtureSerializer(fix).data, status=status.HTTP_200_OK)


class BracketView(ToolkitView):
    request_serializer = BracketRequestSerializer

    def compute(self, data):
        result = data["left_field"].bracket(data["right_field"])
        return {"N": data["N"], "bracket": format_field(result)}


class ClosureView(ToolkitView):
    """Structure constants and flags; a non-closed list answers 422 with the offending pair"""

    def compute(self, data):
        L = closure_check(data["vector_fields"])
        flags = {
            "abelian": is_abelian(L),
            "nilpotent": is_nilpotent(L),
            "solvable": is_solvable(L),
            "semisimple": is_semisimple(L),
        }
        return {"closed": True, "presentation": structure_data(L), "flags": FlagsSerializer(flags).data}


class GeometricRankView(ToolkitView):
    def compute(self, data):
        result = geometric_rank(data["vector_fields"], seed=data.get("seed"))
        body = GeometricRankSerializer(result).data
        body["witness"] = WitnessSerializer(witness_point(result.certificate)).data if result.rank else None
        return body


class TypeView(ToolkitView):
    def compute(self, data):
        L = closure_check(data["vector_fields"])
        C = find_cartan(L, seed=data.get("seed"))
        label = identify_type(root_decomposition(L, C))
        return TypeLabelSerializer(label).data
