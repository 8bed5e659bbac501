"""
Module: document

Pydantic model of a function document, the on-disk description of a step
function, a piecewise-linear càdlàg function, a time change, a homeomorphism or
a turbofunction.

Example:
    >>> from src.models.document import FunctionDocument
    >>> doc = FunctionDocument.model_validate({
    ...     "format": "skoro-function/1", "kind": "timechange", "name": "id",
    ...     "payload": {"nodes": [[0.0, 0.0], [1.0, 1.0]]}})

Dependencies:
    - pydantic
"""

import math
from enum import Enum
from typing import Dict, List, Literal

from pydantic import BaseModel, validator

DOCUMENT_FORMAT = "skoro-function/1"


class DocumentKind(str, Enum):
    STEP = "step"
    PL_CADLAG = "pl_cadlag"
    TIMECHANGE = "timechange"
    HOMEO = "homeo"
    TURBO = "turbo"


PAYLOAD_SHAPES: Dict[DocumentKind, Dict[str, int]] = {
    DocumentKind.STEP: {"nodes": 3},
    DocumentKind.PL_CADLAG: {"nodes": 3},
    DocumentKind.TIMECHANGE: {"nodes": 2},
    DocumentKind.HOMEO: {"nodes": 2},
    DocumentKind.TURBO: {"F": 3, "sigma": 2},
}


class FunctionDocument(BaseModel):
    """
    A named, kind-tagged node list.

    Attributes:
        format (str): Format tag, always "skoro-function/1".
        kind (DocumentKind): What the payload describes.
        name (str): Free-form label.
        payload (Dict[str, List[List[float]]]): Node lists; "nodes" for single
            functions and maps, "F" and "sigma" for turbofunctions.
    """
    format: Literal["skoro-function/1"] = DOCUMENT_FORMAT
    kind: DocumentKind
    name: str = ""
    payload: Dict[str, List[List[float]]]

    @validator('payload')
    def validate_payload_shape(cls, v, values):
        """
        Validates the payload keys and node arity for the document kind.

        Args:
            v (Dict[str, List[List[float]]]): The payload to validate

        Returns:
            Dict[str, List[List[float]]]: The validated payload

        Raises:
            ValueError: If keys are missing or unexpected, or a node has the wrong arity
        """
        kind = values.get('kind')
        if kind is None:
            return v
        shape = PAYLOAD_SHAPES[kind]
        if set(v) != set(shape):
            raise ValueError(f"payload of a {kind.value} document needs exactly the keys {sorted(shape)}")
        for key, arity in shape.items():
            for index, node in enumerate(v[key]):
                if len(node) != arity:
                    raise ValueError(f"{key}[{index}] must have {arity} entries, got {len(node)}")
                if not all(math.isfinite(x) for x in node):
                    raise ValueError(f"{key}[{index}] has a non-finite entry")
        return v

    class Config:
        """Pydantic configuration for FunctionDocument"""
        from_attributes = True
        validate_assignment = True
