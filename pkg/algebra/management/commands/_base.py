"""
Shared plumbing for the toolkit's management commands.

Every command accepts the global flags (-N, --seed, --deg, --freqs, --json,
--precision, --fixture), reads vector fields either from positional DSL
strings or from a shipped fixture, and turns toolkit errors into
CommandError with the documented exit code:

    0 success, 1 mathematical negative, 2 usage or parse error, 3 internal.
"""
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from algebra.catalog import fixture
from algebra.conf import lie_setting
from algebra.dsl import parse_field
from algebra.errors import EXIT_NEGATIVE, EXIT_USAGE, LieToolkitError
from algebra.liepresent import closure_check
from algebra.modsearch import ansatz_space
from algebra.utils.scalars import parse_scalar

logger = logging.getLogger(__name__)


def render_json(data) -> str:
    return JSONRenderer().render(data, renderer_context={"indent": 2}).decode("utf-8")


def human_lines(data, indent=""):
    """Plain-text rendering of the JSON answer, one key per line."""
    lines = []
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{indent}{key}:")
                lines.extend(human_lines(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_plain(value)}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{indent}-")
                lines.extend(human_lines(item, indent + "  "))
            else:
                lines.append(f"{indent}- {_plain(item)}")
    else:
        lines.append(f"{indent}{_plain(data)}")
    return lines


def _plain(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[]"
    if isinstance(value, dict):
        return "{}"
    return str(value)


def parse_freqs(text, dim):
    """'0,0;1,0;-1,0' -> frequency vectors; each entry a Gaussian rational."""
    freqs = []
    for chunk in text.split(";"):
        entries = [c.strip() for c in chunk.split(",") if c.strip()]
        if len(entries) != dim:
            raise LieToolkitError(f"frequency {chunk!r} needs {dim} entries")
        try:
            freqs.append(tuple(parse_scalar(c) for c in entries))
        except ValueError as exc:
            raise LieToolkitError(str(exc)) from exc
    return tuple(freqs)


class Answer(Exception):
    """A mathematical negative that still carries a JSON answer (exit 1)"""

    def __init__(self, data, message):
        self.data = data
        self.message = message
        super().__init__(message)


class ToolkitCommand(BaseCommand):
    """Base class: subclasses implement add_command_arguments() and compute(options)."""
    uses_fields = True

    def add_arguments(self, parser):
        parser.add_argument("-N", dest="N", type=int, help="ambient dimension of C^N")
        parser.add_argument("--seed", type=int, help="seed for regular-element and rank searches")
        parser.add_argument("--deg", type=int, help="polynomial degree of the ansatz")
        parser.add_argument("--freqs", help="exponential frequencies, e.g. '0,0;1,0'")
        parser.add_argument("--json", action="store_true", help="print the JSON answer")
        parser.add_argument("--precision", type=int, help="decimal digits for approximate values")
        parser.add_argument("--fixture", help="use the fields of a shipped fixture")
        if self.uses_fields:
            parser.add_argument("fields", nargs="*", help="vector fields in the field DSL")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        self.options = options
        try:
            data = self.compute(options)
        except Answer as answer:
            self.emit(answer.data)
            raise CommandError(answer.message, returncode=EXIT_NEGATIVE)
        except LieToolkitError as exc:
            if options["json"]:
                self.emit(self.error_data(exc))
            logger.debug(f"{type(exc).__name__}: {exc}")
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=exc.exit_code)
        self.emit(data)

    def error_data(self, exc):
        return exc.as_dict()

    def emit(self, data):
        if self.options["json"]:
            self.stdout.write(render_json(data))
        else:
            self.stdout.write("\n".join(self.human(data)))

    def human(self, data):
        return human_lines(data)

    def compute(self, options):
        raise NotImplementedError

    # inputs

    @staticmethod
    def usage(message):
        return CommandError(message, returncode=EXIT_USAGE)

    def dimension(self):
        if self.options.get("fixture"):
            return fixture(self.options["fixture"]).dim
        dim = self.options.get("N")
        if not dim or dim < 1:
            raise self.usage("-N <dim> is required when fields are given inline")
        return dim

    def parse(self, text, line=1):
        return parse_field(text, self.dimension(), line)

    def vector_fields(self):
        options = self.options
        if options.get("fixture"):
            if options.get("fields"):
                raise self.usage("give either --fixture or field strings, not both")
            return fixture(options["fixture"]).vector_fields()
        texts = options.get("fields") or []
        if not texts:
            raise self.usage("no vector fields given")
        dim = self.dimension()
        # argument n is reported as line n
        return [parse_field(text, dim, line=n) for n, text in enumerate(texts, start=1)]

    def presentation(self):
        return closure_check(self.vector_fields())

    def ansatz(self):
        dim = self.dimension()
        freqs = parse_freqs(self.options["freqs"], dim) if self.options.get("freqs") else ()
        return ansatz_space(dim, self.options.get("deg"), freqs)

    def precision(self):
        return lie_setting("PRECISION", self.options.get("precision"))

