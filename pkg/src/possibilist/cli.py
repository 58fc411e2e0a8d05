"""Command-line front end: consultations, explanation queries and the HTTP server."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from . import __version__
from .config import Settings, get_settings
from .errors import (
    DegreeRangeError,
    DiagnosticsError,
    PossibilistError,
    UnknownAttributeError,
)
from .models.consultation import Consultation
from .models.degree import Degree
from .models.query import OutputFormat, QueryKind, QueryRequest
from .models.system import Side
from .ruleio import format_diagnostic, read_source, serialize_report
from .services import ConsultationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_EXPLAIN_VERBS = {
    "how": QueryKind.HOW,
    "mainly": QueryKind.MAINLY,
    "why-at-least": QueryKind.WHY_AT_LEAST,
    "why-at-most": QueryKind.WHY_AT_MOST,
    "certainty": QueryKind.CERTAINTY,
    "surprise": QueryKind.SURPRISE,
    "diagnose": QueryKind.DIAGNOSE,
}


class UsageError(Exception):
    """Arguments parsed but do not form a valid request."""


def degree_argument(text: str) -> Degree:
    try:
        return Degree.parse(text)
    except DegreeRangeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kb", help="knowledge base file")
    common.add_argument("--facts", help="facts file (missing facts mean total ignorance)")
    common.add_argument("--belief", help="belief model file, for surprise queries")
    common.add_argument(
        "--replay", help="structured consult output to replay instead of --kb/--facts"
    )
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[fmt.value for fmt in OutputFormat],
        help="human text or deterministic structured JSON",
    )
    common.add_argument(
        "--permissive", action="store_true", default=None, help="accept subnormal facts"
    )
    common.add_argument(
        "--with-rules",
        action="store_true",
        default=None,
        help="also show rule-uncertainty contributors",
    )
    common.add_argument("--output", help="write the structured document to this file")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="possibilist",
        description="Possibilistic rule-based inference with explanations",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    consult = commands.add_parser("consult", parents=[common], help="run a consultation")
    consult.add_argument("--atoms", action="store_true", help="print the atom tables")

    explain = commands.add_parser("explain", help="ask an explanation query")
    verbs = explain.add_subparsers(dest="verb", required=True)
    for verb in _EXPLAIN_VERBS:
        query = verbs.add_parser(verb, parents=[common])
        query.add_argument("target", help="attribute, element, or attribute=element")
        query.add_argument("threshold", nargs="?", type=degree_argument)
        query.add_argument(
            "--threshold", dest="threshold_option", type=degree_argument, metavar="T"
        )

    sensitivity = commands.add_parser(
        "sensitivity", parents=[common], help="output degree as a function of one input"
    )
    sensitivity.add_argument("target", help="attribute=element or element")
    sensitivity.add_argument("--rule", required=True)
    sensitivity.add_argument("--side", required=True, choices=[side.value for side in Side])

    commands.add_parser("serve", help="run the HTTP API")
    return parser


def _read(path: str) -> str:
    return read_source(path).unwrap(path)


def _resolve_target(consultation: Consultation, target: str) -> tuple[str, str | None]:
    """``attr=elem``, a bare attribute, or an element of exactly one derived attribute."""
    if "=" in target:
        attribute, _, element = target.partition("=")
        return attribute.strip(), element.strip() or None
    if target in consultation.domains:
        return target, None
    owners = [
        attribute
        for attribute in consultation.derived_attributes
        if target in consultation.domain(attribute)
    ]
    if len(owners) == 1:
        return owners[0], target
    if owners:
        raise UsageError(f"{target!r} belongs to {', '.join(owners)}; write attribute={target}")
    raise UnknownAttributeError(f"{target!r} is neither an attribute nor a derived element")


class Runner:
    """Executes one parsed command line."""

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.service = ConsultationService(settings)
        self.kb = None

    @property
    def output_format(self) -> OutputFormat:
        chosen = getattr(self.args, "output_format", None)
        return OutputFormat(chosen) if chosen else self.settings.output_format

    def consultation(self) -> Consultation:
        if self.args.replay:
            document = json.loads(_read(self.args.replay))
            logger.info("replaying consultation from %s", self.args.replay)
            return Consultation.model_validate(document.get("trace", document))
        if not self.args.kb:
            raise UsageError("either --kb or --replay is required")
        facts_text = _read(self.args.facts) if self.args.facts else ""
        self.kb, consultation = self.service.consult(
            _read(self.args.kb),
            facts_text,
            permissive=self.args.permissive,
            kb_source=self.args.kb,
            facts_source=self.args.facts or "<facts>",
        )
        return consultation

    def beliefs(self, consultation: Consultation):
        if not self.args.belief:
            return None
        kb = self.kb or self.service.attributes_of(consultation)
        return self.service.load_beliefs(kb, _read(self.args.belief), self.args.belief)

    def emit(self, document, human: str) -> None:
        structured = serialize_report(document)
        if self.args.output:
            Path(self.args.output).write_text(structured, encoding="utf-8")
        if self.output_format is OutputFormat.STRUCTURED:
            sys.stdout.write(structured)
        else:
            print(human)

    def consult(self) -> int:
        consultation = self.consultation()
        document = self.service.consultation_report(consultation, self.args.atoms)
        self.emit(document, self.service.render_consultation(consultation, self.args.atoms))
        return EXIT_OK

    def query(self, kind: QueryKind) -> int:
        consultation = self.consultation()
        attribute, element = _resolve_target(consultation, self.args.target)
        threshold = getattr(self.args, "threshold", None)
        if threshold is None:
            threshold = getattr(self.args, "threshold_option", None)
        try:
            request = QueryRequest(
                kind=kind,
                attribute=attribute,
                element=element,
                threshold=threshold,
                rule=getattr(self.args, "rule", None),
                side=getattr(self.args, "side", None),
                kb_path=self.args.kb,
                facts_path=self.args.facts,
                belief_path=self.args.belief,
                output_format=self.output_format,
            )
        except ValidationError as exc:
            raise UsageError(exc.errors()[0]["msg"].removeprefix("Value error, ")) from None
        report, human = self.service.answer(
            consultation, request, self.beliefs(consultation), self.args.with_rules
        )
        query = request.model_dump(
            mode="json", exclude={"kb_path", "facts_path", "belief_path", "output_format"}
        )
        document = {"query": query, "report": report}
        self.emit(document, human)
        return EXIT_OK

    def serve(self) -> int:
        import uvicorn

        from .api import create_app

        uvicorn.run(
            create_app(),
            host=self.settings.api_host,
            port=self.settings.api_port,
            log_level=self.settings.log_level.lower(),
        )
        return EXIT_OK

    def run(self) -> int:
        command = self.args.command
        if command == "consult":
            return self.consult()
        if command == "explain":
            return self.query(_EXPLAIN_VERBS[self.args.verb])
        if command == "sensitivity":
            return self.query(QueryKind.SENSITIVITY)
        return self.serve()


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        return Runner(args, settings).run()
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DiagnosticsError as exc:
        for diagnostic in exc.diagnostics:
            print(format_diagnostic(diagnostic, exc.source), file=sys.stderr)
        return EXIT_FAILURE
    except (json.JSONDecodeError, ValidationError) as exc:
        print(f"{parser.prog}: cannot replay consultation: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except PossibilistError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
