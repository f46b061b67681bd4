"""
Keccak-p[b, nr] permutations.

The state is held as 25 lanes, lane (x, y) at index x + 5y, each lane an
integer whose bit z is A[x, y, z]. The five step mappings are exposed one by
one so that the round function can be checked against its composition;
``permute_lanes`` is the fused form used on the hot path.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .bits import BitString
from .exceptions import InvalidParameterError, InvalidRoundIndexError, InvalidWidthError

logger = logging.getLogger(__name__)

WIDTHS = (25, 50, 100, 200, 400, 800, 1600)


def lane_index(x: int, y: int) -> int:
    return (x % 5) + 5 * (y % 5)


def rotl(value: int, shift: int, w: int) -> int:
    """Rotate a w-bit lane towards higher z by ``shift`` positions."""
    shift %= w
    if not shift:
        return value
    return ((value << shift) | (value >> (w - shift))) & ((1 << w) - 1)


@dataclass(frozen=True)
class PermutationParams:
    """Width and round count of a Keccak-p permutation.

    ``nr`` defaults to 12 + 2l, the count used by every SHA-3 function.
    Zero rounds is accepted and gives the identity.
    """

    b: int
    nr: Optional[int] = None

    def __post_init__(self):
        if self.b not in WIDTHS:
            raise InvalidWidthError(f"Unsupported permutation width {self.b}; expected one of {WIDTHS}")
        if self.nr is None:
            object.__setattr__(self, 'nr', 12 + 2 * self.l)
        if not isinstance(self.nr, int) or self.nr < 0:
            raise InvalidParameterError(f"Round count must be a non-negative integer, got {self.nr!r}")

    @property
    def w(self) -> int:
        return self.b // 25

    @property
    def l(self) -> int:  # noqa: E743
        return self.w.bit_length() - 1

    @property
    def mask(self) -> int:
        return (1 << self.w) - 1


KECCAK_F1600 = PermutationParams(1600)


@dataclass(frozen=True)
class StateArray:
    """The 5x5xw state, stored as 25 lanes."""

    params: PermutationParams
    lanes: Tuple[int, ...]

    def __post_init__(self):
        if len(self.lanes) != 25:
            raise InvalidWidthError(f"A state has exactly 25 lanes, got {len(self.lanes)}")
        mask = self.params.mask
        for lane in self.lanes:
            if not 0 <= lane <= mask:
                raise InvalidWidthError(f"Lane value {lane:#x} does not fit in {self.params.w} bits")

    @classmethod
    def zero(cls, params: PermutationParams) -> 'StateArray':
        return cls(params, (0,) * 25)

    @classmethod
    def from_bits(cls, params: PermutationParams, coordinates: Iterable[Tuple[int, int, int]]) -> 'StateArray':
        """A state with exactly the listed (x, y, z) bits set."""
        lanes = [0] * 25
        for x, y, z in coordinates:
            if not 0 <= z < params.w:
                raise InvalidWidthError(f"z={z} outside a {params.w}-bit lane")
            lanes[lane_index(x, y)] |= 1 << z
        return cls(params, tuple(lanes))

    def lane(self, x: int, y: int) -> int:
        return self.lanes[lane_index(x, y)]

    def bit(self, x: int, y: int, z: int) -> int:
        return (self.lane(x, y) >> (z % self.params.w)) & 1

    def set_bits(self) -> List[Tuple[int, int, int]]:
        return [
            (x, y, z)
            for y in range(5)
            for x in range(5)
            for z in range(self.params.w)
            if self.bit(x, y, z)
        ]

    def popcount(self) -> int:
        return sum(bin(lane).count('1') for lane in self.lanes)

    def __xor__(self, other: 'StateArray') -> 'StateArray':
        if not isinstance(other, StateArray):
            return NotImplemented
        if other.params.w != self.params.w:
            raise InvalidWidthError('Cannot combine states of different widths')
        return StateArray(self.params, tuple(a ^ b for a, b in zip(self.lanes, other.lanes)))


@dataclass(frozen=True)
class RhoOffsets:
    """Rotation amount per lane for a given lane size."""

    w: int
    offsets: Tuple[int, ...]

    def offset(self, x: int, y: int) -> int:
        return self.offsets[lane_index(x, y)]


@dataclass(frozen=True)
class RoundConstantTable:
    """Round constants RC for rounds 0..nr-1 at lane size w."""

    w: int
    constants: Tuple[int, ...]

    def __len__(self):
        return len(self.constants)

    def __getitem__(self, ir: int) -> int:
        if not 0 <= ir < len(self.constants):
            raise InvalidRoundIndexError(f"Round index {ir} outside 0..{len(self.constants) - 1}")
        return self.constants[ir]


@dataclass(frozen=True)
class ColumnParity:
    """Column parities C[x, z] and the theta effect D[x, z], one w-bit word per x."""

    c_plane: Tuple[int, ...]
    d_plane: Tuple[int, ...]


def compute_rho_offsets(w: int) -> RhoOffsets:
    """Walk (1, 0) -> (y, 2x + 3y) for t = 0..23, assigning (t+1)(t+2)/2 mod w."""
    if w not in {b // 25 for b in WIDTHS}:
        raise InvalidWidthError(f"Unsupported lane size {w}")
    offsets = [0] * 25
    x, y = 1, 0
    for t in range(24):
        offsets[lane_index(x, y)] = ((t + 1) * (t + 2) // 2) % w
        x, y = y, (2 * x + 3 * y) % 5
    return RhoOffsets(w, tuple(offsets))


@lru_cache(maxsize=None)
def rho_offsets(w: int) -> RhoOffsets:
    """Offsets for lane size w, computed once per width."""
    return compute_rho_offsets(w)


def rc(t: int) -> int:
    """Output bit t of the round-constant LFSR.

    8-bit register seeded with 1, feedback polynomial x^8 + x^6 + x^5 + x^4 + 1.
    The sequence has period 255.
    """
    t %= 255
    if t == 0:
        return 1
    register = 1
    for _ in range(t):
        register <<= 1
        if register & 0x100:
            register ^= 0x171
    return register & 1


def generate_round_constants(params: PermutationParams) -> RoundConstantTable:
    """RC[2^j - 1] = rc(j + 7 ir) for 0 <= j <= l; every other bit is zero."""
    constants = []
    for ir in range(params.nr):
        constant = 0
        for j in range(params.l + 1):
            constant |= rc(j + 7 * ir) << ((1 << j) - 1)
        constants.append(constant)
    logger.debug("Generated %d round constants for w=%d", params.nr, params.w)
    return RoundConstantTable(params.w, tuple(constants))


@lru_cache(maxsize=None)
def round_constants(w: int, nr: int) -> RoundConstantTable:
    return generate_round_constants(PermutationParams(25 * w, nr))


def _require_width(state_w: int, table_w: int, what: str):
    if state_w != table_w:
        raise InvalidWidthError(f"{what} built for w={table_w} cannot be applied to a w={state_w} state")


def string_to_state(s: BitString, params: PermutationParams) -> StateArray:
    """A[x, y, z] = S[w(5y + x) + z]."""
    if s.length != params.b:
        raise InvalidWidthError(f"Expected a {params.b}-bit string, got {s.length} bits")
    value = s.to_int()
    w, mask = params.w, params.mask
    return StateArray(params, tuple((value >> (w * i)) & mask for i in range(25)))


def state_to_string(a: StateArray) -> BitString:
    w = a.params.w
    value = 0
    for i, lane in enumerate(a.lanes):
        value |= lane << (w * i)
    return BitString.from_int(value, a.params.b)


def column_parity(a: StateArray) -> ColumnParity:
    lanes, w = a.lanes, a.params.w
    c_plane = tuple(lanes[x] ^ lanes[x + 5] ^ lanes[x + 10] ^ lanes[x + 15] ^ lanes[x + 20] for x in range(5))
    d_plane = tuple(c_plane[(x - 1) % 5] ^ rotl(c_plane[(x + 1) % 5], 1, w) for x in range(5))
    return ColumnParity(c_plane, d_plane)


def theta(a: StateArray) -> StateArray:
    d_plane = column_parity(a).d_plane
    return StateArray(a.params, tuple(lane ^ d_plane[i % 5] for i, lane in enumerate(a.lanes)))


def rho(a: StateArray, offsets: Optional[RhoOffsets] = None) -> StateArray:
    w = a.params.w
    offsets = offsets or rho_offsets(w)
    _require_width(w, offsets.w, 'Rho offsets')
    return StateArray(a.params, tuple(rotl(lane, offsets.offsets[i], w) for i, lane in enumerate(a.lanes)))


def pi(a: StateArray) -> StateArray:
    """A'[x, y] = A[(x + 3y) mod 5, x]."""
    return StateArray(
        a.params,
        tuple(a.lane(x + 3 * y, x) for y in range(5) for x in range(5)),
    )


def chi(a: StateArray) -> StateArray:
    lanes = []
    for y in range(5):
        for x in range(5):
            lanes.append(a.lane(x, y) ^ (~a.lane(x + 1, y) & a.lane(x + 2, y)))
    return StateArray(a.params, tuple(lanes))


def iota(a: StateArray, ir: int, rc_table: Optional[RoundConstantTable] = None) -> StateArray:
    rc_table = rc_table or round_constants(a.params.w, a.params.nr)
    _require_width(a.params.w, rc_table.w, 'Round constant table')
    if not 0 <= ir < a.params.nr:
        raise InvalidRoundIndexError(f"Round index {ir} outside 0..{a.params.nr - 1}")
    lanes = list(a.lanes)
    lanes[0] ^= rc_table[ir]
    return StateArray(a.params, tuple(lanes))


def rnd(a: StateArray, ir: int, offsets: Optional[RhoOffsets] = None,
        rc_table: Optional[RoundConstantTable] = None) -> StateArray:
    """One round: iota(chi(pi(rho(theta(a)))), ir)."""
    return iota(chi(pi(rho(theta(a), offsets))), ir, rc_table)


@lru_cache(maxsize=None)
def _rho_pi_schedule(offsets: RhoOffsets) -> Tuple[Tuple[int, int], ...]:
    """For each source lane, where pi sends it and how far rho rotates it."""
    schedule = []
    for i, shift in enumerate(offsets.offsets):
        x, y = i % 5, i // 5
        schedule.append((lane_index(y, 2 * x + 3 * y), shift))
    return tuple(schedule)


def permute_lanes(lanes: Sequence[int], params: PermutationParams,
                  offsets: Optional[RhoOffsets] = None,
                  rc_table: Optional[RoundConstantTable] = None) -> List[int]:
    """Apply all nr rounds to a list of 25 lanes with the steps fused per round."""
    w, mask = params.w, params.mask
    offsets = offsets or rho_offsets(w)
    rc_table = rc_table or round_constants(w, params.nr)
    _require_width(w, offsets.w, 'Rho offsets')
    _require_width(w, rc_table.w, 'Round constant table')
    if len(rc_table) < params.nr:
        raise InvalidRoundIndexError(f"{len(rc_table)} round constants cannot drive {params.nr} rounds")
    schedule = _rho_pi_schedule(offsets)
    one = 1 % w
    spare = w - one
    constants = rc_table.constants
    a = list(lanes)
    b = [0] * 25

    for ir in range(params.nr):
        c0 = a[0] ^ a[5] ^ a[10] ^ a[15] ^ a[20]
        c1 = a[1] ^ a[6] ^ a[11] ^ a[16] ^ a[21]
        c2 = a[2] ^ a[7] ^ a[12] ^ a[17] ^ a[22]
        c3 = a[3] ^ a[8] ^ a[13] ^ a[18] ^ a[23]
        c4 = a[4] ^ a[9] ^ a[14] ^ a[19] ^ a[24]
        d = (
            c4 ^ (((c1 << one) | (c1 >> spare)) & mask),
            c0 ^ (((c2 << one) | (c2 >> spare)) & mask),
            c1 ^ (((c3 << one) | (c3 >> spare)) & mask),
            c2 ^ (((c4 << one) | (c4 >> spare)) & mask),
            c3 ^ (((c0 << one) | (c0 >> spare)) & mask),
        )
        for i in range(25):
            dest, shift = schedule[i]
            v = a[i] ^ d[i % 5]
            # shift == 0 leaves v >> w == 0, so no branch is needed
            b[dest] = ((v << shift) | (v >> (w - shift))) & mask
        for y in (0, 5, 10, 15, 20):
            b0, b1, b2, b3, b4 = b[y], b[y + 1], b[y + 2], b[y + 3], b[y + 4]
            a[y] = b0 ^ (~b1 & b2)
            a[y + 1] = b1 ^ (~b2 & b3)
            a[y + 2] = b2 ^ (~b3 & b4)
            a[y + 3] = b3 ^ (~b4 & b0)
            a[y + 4] = b4 ^ (~b0 & b1)
        a[0] ^= constants[ir]
    return a


def permute(a: StateArray) -> StateArray:
    """Keccak-p on a state: all nr rounds of ``a.params``."""
    return StateArray(a.params, tuple(permute_lanes(a.lanes, a.params)))


def keccak_p(s: BitString, params: PermutationParams) -> BitString:
    """Keccak-p[b, nr] on a b-bit string, round indices 0..nr-1."""
    return state_to_string(permute(string_to_state(s, params)))
