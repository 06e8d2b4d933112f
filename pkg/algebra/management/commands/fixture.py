from algebra.catalog import load_fixture, list_fixtures, verify_all
from algebra.serializers import FixtureReportSerializer, FixtureSerializer

from ._base import Answer, ToolkitCommand


class Command(ToolkitCommand):
    help = "List, show or verify the shipped realization fixtures"
    uses_fields = False

    def add_command_arguments(self, parser):
        parser.add_argument("action", choices=("list", "show", "verify"))
        parser.add_argument("name", nargs="?", help="fixture name (show) or glob pattern (list, verify)")

    def compute(self, options):
        action, name = options["action"], options["name"]
        if action == "list":
            return {"fixtures": list_fixtures(name)}
        if action == "show":
            if not name:
                raise self.usage("fixture show needs a name")
            return FixtureSerializer(load_fixture(name)).data
        report = verify_all(name, seed=options["seed"])
        data = {
            "ok": report.ok,
            "failed": list(report.failed),
            "reports": FixtureReportSerializer(report.reports, many=True).data,
        }
        if not report.ok:
            raise Answer(data, f"{len(report.failed)} fixture(s) failed verification")
        return data

    def human(self, data):
        if "fixtures" in data:
            return data["fixtures"]
        if "reports" in data:
            lines = [f"{r['name']}: {'ok' if r['ok'] else 'FAILED'}" for r in data["reports"]]
            for r in data["reports"]:
                for check in r["checks"]:
                    if not check["passed"]:
                        lines.append(f"  {r['name']} {check['key']}: expected {check['expected']}, got {check['actual']}")
                if r["error"]:
                    lines.append(f"  {r['name']}: {r['error']}")
            return lines
        return super().human(data)
