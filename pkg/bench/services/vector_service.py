"""
Known-answer verification against response files.

Response files are blocks of ``key = value`` lines (``Len``, ``Msg``, ``MD``
for the fixed-length hashes; ``Outputlen``, ``Output`` for SHAKE), with
``#`` comments and ``[name = value]`` section headers.
"""
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from keccak.exceptions import UnknownVariantError
from keccak.functions import VARIANTS, FunctionVariant, digest_message, get_variant

from ..exceptions import VectorFileError

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
SKIP = 'skip'

INT_KEYS = {'Len', 'Outputlen', 'COUNT'}
HEX_KEYS = {'Msg', 'MD', 'Output'}

_ALGORITHM_PATTERN = re.compile(r'\b(SHA3[-_]?(?:224|256|384|512)|SHAKE[-_]?(?:128|256))\b', re.IGNORECASE)
_DIGEST_BITS = {variant.digest_bits: variant for variant in VARIANTS if not variant.is_xof}


@dataclass(frozen=True)
class ResponseVector:
    """One known-answer entry."""
    line_number: int
    variant: FunctionVariant
    message: bytes
    message_bits: int
    expected: bytes
    output_bits: int
    count: Optional[int] = None

    @property
    def byte_aligned(self) -> bool:
        return self.message_bits % 8 == 0


@dataclass(frozen=True)
class VectorOutcome:
    vector: ResponseVector
    status: str
    actual: Optional[bytes] = None

    def describe(self) -> str:
        v = self.vector
        label = f"line {v.line_number} ({v.variant.name}, Len = {v.message_bits})"
        if self.status == FAIL:
            return f"{label}: expected {v.expected.hex()} got {self.actual.hex()}"
        if self.status == SKIP:
            return f"{label}: skipped, message is not byte-aligned"
        return f"{label}: ok"


@dataclass
class VectorReport:
    outcomes: List[VectorOutcome] = field(default_factory=list)

    def _with(self, status):
        return [outcome for outcome in self.outcomes if outcome.status == status]

    @property
    def passed(self) -> List[VectorOutcome]:
        return self._with(PASS)

    @property
    def failed(self) -> List[VectorOutcome]:
        return self._with(FAIL)

    @property
    def skipped(self) -> List[VectorOutcome]:
        return self._with(SKIP)

    @property
    def ok(self) -> bool:
        return not self.failed


def _infer_variant(text: str) -> Optional[FunctionVariant]:
    match = _ALGORITHM_PATTERN.search(text)
    return get_variant(match.group(1)) if match else None


def _parse_value(key: str, value: str, line_number: int):
    if key in INT_KEYS:
        try:
            return int(value)
        except ValueError:
            raise VectorFileError(f"{key} must be an integer, got {value!r}", line_number)
    try:
        return bytes.fromhex(value)
    except ValueError:
        raise VectorFileError(f"{key} is not valid hex", line_number)


class _ResponseParser:
    """Line-by-line state machine; a vector is complete at its MD or Output line."""

    def __init__(self, variant: Optional[FunctionVariant] = None):
        self.variant = variant
        self.explicit = variant is not None
        self.header_output_bits: Optional[int] = None
        self.fields: Dict[str, object] = {}
        self.vectors: List[ResponseVector] = []

    def feed(self, line_number: int, raw: str) -> None:
        line = raw.strip()
        if not line:
            return
        if line.startswith('#'):
            if self.variant is None:
                self.variant = _infer_variant(line)
            return
        if line.startswith('['):
            self._header(line_number, line)
            return
        key, sep, value = (part.strip() for part in line.partition('='))
        if not sep or not key:
            raise VectorFileError(f"Expected 'key = value', got {line!r}", line_number)
        if key not in INT_KEYS | HEX_KEYS:
            raise VectorFileError(f"Unknown key {key!r}", line_number)
        self.fields[key] = _parse_value(key, value, line_number)
        if key in ('MD', 'Output'):
            self._complete(line_number, key)

    def _header(self, line_number: int, line: str) -> None:
        if not line.endswith(']'):
            raise VectorFileError(f"Unterminated section header {line!r}", line_number)
        name, sep, value = (part.strip() for part in line[1:-1].partition('='))
        if not sep:
            return
        if name == 'L':
            bits = _parse_value('Len', value, line_number)
            if self.variant is None and bits in _DIGEST_BITS:
                self.variant = _DIGEST_BITS[bits]
        elif name == 'Outputlen':
            self.header_output_bits = _parse_value('Outputlen', value, line_number)

    def _complete(self, line_number: int, digest_key: str) -> None:
        fields, self.fields = self.fields, {}
        variant = self.variant
        if variant is None:
            raise VectorFileError('Cannot tell which function this file tests; pass --algo', line_number)
        if variant.is_xof != (digest_key == 'Output'):
            raise VectorFileError(f"{digest_key} does not fit {variant.name}", line_number)

        expected = fields[digest_key]
        message = fields.get('Msg')
        message_bits = fields.get('Len')
        if message_bits is None:
            if message is None:
                raise VectorFileError('Vector has neither Len nor Msg', line_number)
            message_bits = 8 * len(message)
        elif message_bits == 0:
            message = b''
        elif message is None or 8 * len(message) < message_bits:
            raise VectorFileError(f"Msg is shorter than Len = {message_bits}", line_number)
        else:
            message = message[:(message_bits + 7) // 8]

        if variant.is_xof:
            output_bits = fields.get('Outputlen') or self.header_output_bits or 8 * len(expected)
        else:
            output_bits = variant.digest_bits
        if len(expected) != (output_bits + 7) // 8:
            raise VectorFileError(f"{digest_key} holds {len(expected)} bytes, expected {output_bits} bits", line_number)

        self.vectors.append(ResponseVector(
            line_number=line_number,
            variant=variant,
            message=message,
            message_bits=message_bits,
            expected=expected,
            output_bits=output_bits,
            count=fields.get('COUNT'),
        ))

    def finish(self, line_number: int) -> List[ResponseVector]:
        if self.fields:
            raise VectorFileError('File ends inside a vector', line_number)
        return self.vectors


def parse_response_text(text: str, variant=None) -> List[ResponseVector]:
    """Parse response-file text; ``variant`` overrides whatever the file header says."""
    try:
        variant = get_variant(variant) if variant is not None else None
    except UnknownVariantError as e:
        raise VectorFileError(str(e))
    parser = _ResponseParser(variant)
    lines = text.splitlines()
    for line_number, line in enumerate(lines, start=1):
        parser.feed(line_number, line)
    return parser.finish(len(lines))


def parse_response_file(path, variant=None) -> List[ResponseVector]:
    return parse_response_text(Path(path).read_text(encoding='utf-8'), variant)


def check_vector(vector: ResponseVector) -> VectorOutcome:
    if not vector.byte_aligned:
        return VectorOutcome(vector, SKIP)
    actual = digest_message(vector.variant, vector.message, vector.output_bits)
    return VectorOutcome(vector, PASS if actual == vector.expected else FAIL, actual)


def verify_vectors(path, variant=None) -> VectorReport:
    """Recompute every vector in a response file."""
    vectors = parse_response_file(path, variant)
    report = VectorReport([check_vector(vector) for vector in vectors])
    if report.skipped:
        logger.warning("%s: skipped %d vectors with non-byte-aligned messages", path, len(report.skipped))
    for outcome in report.failed:
        logger.debug("Vector mismatch %s", outcome.describe())
    logger.info(
        "%s: %d passed, %d failed, %d skipped",
        path, len(report.passed), len(report.failed), len(report.skipped),
    )
    return report
