# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""
`mixlr.transform`
====================================================

Data transformation functions.

From model sets and reports to JSON documents and back, and from datasets to
content digests. JSON output is key-sorted with full-precision floats, so
equal inputs always serialise to identical bytes.
"""

import json
import math

try:
    from typing import Any, Dict, Optional, Tuple
except ImportError:
    pass

import adafruit_hashlib as hashlib
import numpy as np

from mixlr.common import InvalidInputError, ParseError
from mixlr.core import Dataset, ModelSet, Partition

__version__ = "0.0.0+auto.0"
__repo__ = "https://github.com/mixlr/mixlr.git"


def to_plain(value: Any) -> Any:
    """Converts numpy containers and scalars to plain Python values, and
    non-finite floats to ``None`` (JSON has no infinities).

    >>> to_plain({"a": np.arange(2), "b": float("inf")})
    {'a': [0, 1], 'b': None}
    """

    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, ModelSet):
        return value.to_list()
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        return number if math.isfinite(number) else None
    return value


def dumps(document: Any) -> str:
    """Serialises ``document`` as stable, key-sorted JSON."""

    return json.dumps(to_plain(document), sort_keys=True, indent=2, allow_nan=False) + "\n"


def models_document(models: ModelSet, labels: Optional[Partition] = None) -> Dict[str, Any]:
    """JSON document of a model set, optionally with the true labels."""

    document: Dict[str, Any] = {"k": models.k, "d": models.d, "thetas": models.to_list()}
    if labels is not None:
        document["labels"] = labels.labels.tolist()
    return document


def parse_models(text: str) -> Tuple[ModelSet, Optional[Partition]]:
    """Parses a document written by `models_document`.

    :raise ParseError: when the text is not valid JSON, lacks ``thetas`` or
        holds malformed parameters or labels.
    """

    try:
        document = json.loads(text)
    except ValueError as err:
        raise ParseError(getattr(err, "lineno", 0), "invalid JSON: %s" % err) from err
    if not isinstance(document, dict) or "thetas" not in document:
        raise ParseError(1, "expected an object with a 'thetas' entry")
    try:
        models = ModelSet(document["thetas"])
    except InvalidInputError as err:
        raise ParseError(_key_line(text, "thetas"), str(err)) from err
    labels = None
    if document.get("labels") is not None:
        try:
            labels = Partition(document["labels"], models.k)
        except InvalidInputError as err:
            raise ParseError(_key_line(text, "labels"), str(err)) from err
    return models, labels


def _key_line(text: str, key: str) -> int:
    position = text.find('"%s"' % key)
    return text.count("\n", 0, max(position, 0)) + 1


def dataset_digest(data: Dataset) -> str:
    """SHA-256 hex digest of a dataset's shape and values.

    Equal datasets always share a digest.
    """

    hasher = hashlib.sha256()
    hasher.update(("%i,%i;" % (data.n, data.d)).encode("ascii"))
    hasher.update(np.ascontiguousarray(data.covariates, dtype="<f8").tobytes())
    hasher.update(np.ascontiguousarray(data.targets, dtype="<f8").tobytes())
    return hasher.hexdigest()
