"""
Module: documents

Reading and writing function documents.

A document is UTF-8 YAML with LF line endings and a fixed field order:

    format: skoro-function/1
    kind: turbo
    name: limit
    payload:
      F:
      - [0.0, 0.0, 0.0]
      ...
      sigma:
      - [0.0, 0.0]
      ...

Numbers are written with 17 significant digits, so that loading a saved
document reproduces every node exactly and saving a loaded canonical document
reproduces it byte for byte.

Dependencies:
    - yaml
    - pydantic
    - src.models.document
"""

import logging
from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import ValidationError

from src.errors.core import DocumentError, InvariantViolation, OutputError, PreconditionError
from src.models.document import DOCUMENT_FORMAT, DocumentKind, FunctionDocument
from src.piecewise import CadlagFunction, Homeomorphism, TimeChange
from src.turbo import Turbofunction, embed

logger = logging.getLogger(__name__)

DocumentObject = Union[CadlagFunction, TimeChange, Homeomorphism, Turbofunction]


def format_number(value: float) -> str:
    """17 significant digits, always recognizable as a YAML float."""
    text = format(float(value), ".17g")
    if "e" in text:
        mantissa, exponent = text.split("e")
        if "." not in mantissa:
            mantissa += ".0"
        if exponent[0] not in "+-":
            exponent = "+" + exponent
        return f"{mantissa}e{exponent}"
    if "." not in text and "inf" not in text and "nan" not in text:
        text += ".0"
    return text


class _DocumentDumper(yaml.SafeDumper):
    pass


def _represent_float(dumper: yaml.SafeDumper, value: float) -> yaml.ScalarNode:
    return dumper.represent_scalar("tag:yaml.org,2002:float", format_number(value))


_DocumentDumper.add_representer(float, _represent_float)


def dump_document(doc: FunctionDocument) -> str:
    """Serializes a document to its canonical text."""
    data = {
        "format": doc.format,
        "kind": doc.kind.value,
        "name": doc.name,
        "payload": {key: [[float(v) for v in node] for node in nodes] for key, nodes in doc.payload.items()},
    }
    return yaml.dump(
        data, Dumper=_DocumentDumper, sort_keys=False, default_flow_style=None, allow_unicode=True, width=1000
    )


def _line_of(text: str, field: str) -> Optional[int]:
    key = field.split(".")[-1] if field else ""
    for number, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith(f"{key}:"):
            return number
    return None


def parse_document(text: str) -> FunctionDocument:
    """
    Parses and validates document text.

    Raises:
        DocumentError: On malformed YAML or a schema violation, with line and field when known.
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise DocumentError(f"Malformed YAML: {getattr(e, 'problem', e)}", line=mark.line + 1 if mark else None) from e
    if not isinstance(data, dict):
        raise DocumentError("A document must be a mapping with format, kind, name and payload", line=1)
    try:
        return FunctionDocument.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise DocumentError(error["msg"], line=_line_of(text, field), field=field) from e


def load_document(path: Union[str, Path]) -> FunctionDocument:
    """
    Reads a document from disk.

    Raises:
        OutputError: If the file cannot be read.
        DocumentError: If it cannot be parsed or validated.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Cannot read {path}: {e}") from e
    logger.debug("Loaded document %s", path)
    return parse_document(text)


def save_document(doc: FunctionDocument, path: Union[str, Path]) -> None:
    """
    Raises:
        OutputError: If the file cannot be written.
    """
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(dump_document(doc))
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}") from e


def to_object(doc: FunctionDocument) -> DocumentObject:
    """
    Builds the in-memory value described by a document.

    Raises:
        DocumentError: If the nodes violate the invariants of the kind.
    """
    try:
        if doc.kind == DocumentKind.TURBO:
            return Turbofunction(CadlagFunction(doc.payload["F"]), TimeChange.from_nodes(doc.payload["sigma"]))
        nodes = doc.payload["nodes"]
        if doc.kind == DocumentKind.TIMECHANGE:
            return TimeChange.from_nodes(nodes)
        if doc.kind == DocumentKind.HOMEO:
            return Homeomorphism.from_nodes(nodes)
        function = CadlagFunction(nodes)
    except InvariantViolation as e:
        raise DocumentError(str(e), field="payload") from e
    if doc.kind == DocumentKind.STEP and not function.is_step:
        raise DocumentError("A step document must have flat segments only", field="payload.nodes")
    return function


def from_object(value: DocumentObject, name: str = "") -> FunctionDocument:
    """Describes an in-memory value as a document."""
    if isinstance(value, Turbofunction):
        kind = DocumentKind.TURBO
        payload = {"F": [list(n) for n in value.F.nodes], "sigma": [list(n) for n in value.sigma.nodes]}
    elif isinstance(value, CadlagFunction):
        kind = DocumentKind.STEP if value.is_step else DocumentKind.PL_CADLAG
        payload = {"nodes": [list(n) for n in value.nodes]}
    elif isinstance(value, Homeomorphism):
        kind = DocumentKind.HOMEO
        payload = {"nodes": [list(n) for n in value.nodes]}
    else:
        kind = DocumentKind.TIMECHANGE
        payload = {"nodes": [list(n) for n in value.nodes]}
    return FunctionDocument(format=DOCUMENT_FORMAT, kind=kind, name=name, payload=payload)


def load_function(path: Union[str, Path]) -> CadlagFunction:
    """
    Raises:
        PreconditionError: If the document does not describe a function.
    """
    value = to_object(load_document(path))
    if not isinstance(value, CadlagFunction):
        raise PreconditionError(f"{path} does not describe a step or piecewise-linear function")
    return value


def load_turbo(path: Union[str, Path]) -> Turbofunction:
    """
    Loads a turbofunction; function documents are embedded.

    Raises:
        PreconditionError: If the document describes a time change or homeomorphism.
    """
    value = to_object(load_document(path))
    if isinstance(value, CadlagFunction):
        return embed(value)
    if not isinstance(value, Turbofunction):
        raise PreconditionError(f"{path} does not describe a turbofunction")
    return value
