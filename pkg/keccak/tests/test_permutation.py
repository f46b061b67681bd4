import random

from django.conf import settings
from django.test import SimpleTestCase

from keccak import permutation as kp
from keccak.bits import BitString
from keccak.exceptions import InvalidParameterError, InvalidRoundIndexError, InvalidWidthError
from keccak.permutation import PermutationParams, StateArray
from keccak.tests import bitlevel

# Published first two lanes of Keccak-f[1600] applied to the all-zero state
ZERO_STATE_LANE_0 = 0xF1258F7940E1DDE7
ZERO_STATE_LANE_1 = 0x84D5CCF933C0478A

ROUND_CONSTANTS_1600 = (
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
    0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
)


def random_state(rng, params):
    return StateArray(params, tuple(rng.getrandbits(params.w) for _ in range(25)))


class PermutationParamsTestCase(SimpleTestCase):
    def test_width_table(self):
        """Every width has the lane size and log2 of the width table."""
        expected = {25: (1, 0), 50: (2, 1), 100: (4, 2), 200: (8, 3), 400: (16, 4), 800: (32, 5), 1600: (64, 6)}
        for b, (w, l) in expected.items():
            params = PermutationParams(b)
            self.assertEqual((params.w, params.l), (w, l))
            self.assertEqual(params.nr, 12 + 2 * l)
        self.assertEqual(PermutationParams(1600).nr, 24)

    def test_rejects_unknown_width(self):
        with self.assertRaises(InvalidWidthError):
            PermutationParams(1000)

    def test_rejects_negative_rounds(self):
        with self.assertRaises(InvalidParameterError):
            PermutationParams(1600, -1)


class StateMappingTestCase(SimpleTestCase):
    def setUp(self):
        self.params = PermutationParams(1600)
        self.rng = random.Random(1)

    def test_zero_string_gives_zero_state(self):
        state = kp.string_to_state(BitString.zeros(1600), self.params)
        self.assertEqual(state.lanes, (0,) * 25)
        self.assertEqual(kp.state_to_string(state), BitString.zeros(1600))

    def test_bit_64_is_lane_one_zero(self):
        """S[64] lands on A[1, 0, 0]."""
        state = kp.string_to_state(BitString.from_int(1 << 64, 1600), self.params)
        self.assertEqual(state.set_bits(), [(1, 0, 0)])

    def test_lane_zero_one_is_bit_320(self):
        state = StateArray.from_bits(self.params, [(0, 1, 0)])
        self.assertEqual(kp.state_to_string(state).to_int(), 1 << 320)

    def test_round_trip(self):
        for _ in range(1000):
            s = BitString.from_int(self.rng.getrandbits(1600), 1600)
            self.assertEqual(kp.state_to_string(kp.string_to_state(s, self.params)), s)

    def test_length_mismatch(self):
        with self.assertRaises(InvalidWidthError):
            kp.string_to_state(BitString.zeros(1599), self.params)


class StepMappingTestCase(SimpleTestCase):
    def setUp(self):
        self.params = PermutationParams(1600)
        self.zero = StateArray.zero(self.params)
        self.rng = random.Random(7)

    def test_zero_is_fixed_by_theta_rho_pi_chi(self):
        for step in (kp.theta, kp.rho, kp.pi, kp.chi):
            self.assertEqual(step(self.zero), self.zero)

    def test_theta_single_bit(self):
        """One set bit spreads to two neighbouring columns: 11 bits in total."""
        out = kp.theta(StateArray.from_bits(self.params, [(0, 0, 0)]))
        expected = {(0, 0, 0)} | {(1, y, 0) for y in range(5)} | {(4, y, 1) for y in range(5)}
        self.assertEqual(set(out.set_bits()), expected)
        self.assertEqual(out.popcount(), 11)

    def test_column_parity(self):
        state = random_state(self.rng, self.params)
        parity = kp.column_parity(state)
        for x in range(5):
            for z in range(64):
                expected = 0
                for y in range(5):
                    expected ^= state.bit(x, y, z)
                self.assertEqual((parity.c_plane[x] >> z) & 1, expected)

    def test_rho_single_bits(self):
        state = StateArray.from_bits(self.params, [(0, 0, 5)])
        self.assertEqual(kp.rho(state), state)
        moved = kp.rho(StateArray.from_bits(self.params, [(1, 0, 0)]))
        self.assertEqual(moved.set_bits(), [(1, 0, 1)])

    def test_rho_offsets_match_published_table(self):
        offsets = kp.rho_offsets(64)
        self.assertEqual(offsets.offset(0, 0), 0)
        self.assertEqual(offsets.offsets, (
            0, 1, 62, 28, 27,
            36, 44, 6, 55, 20,
            3, 10, 43, 25, 39,
            41, 45, 15, 21, 8,
            18, 2, 61, 56, 14,
        ))

    def test_rho_rejects_offsets_of_another_width(self):
        with self.assertRaises(InvalidWidthError):
            kp.rho(self.zero, kp.rho_offsets(8))

    def test_pi_moves_lanes(self):
        lane = 0x0123456789ABCDEF
        lanes = [0] * 25
        lanes[kp.lane_index(1, 1)] = lane
        out = kp.pi(StateArray(self.params, tuple(lanes)))
        self.assertEqual(out.lane(1, 0), lane)
        self.assertEqual(sum(1 for value in out.lanes if value), 1)
        state = random_state(self.rng, self.params)
        self.assertEqual(kp.pi(state).lane(0, 0), state.lane(0, 0))

    def test_chi_rows(self):
        full_row = StateArray.from_bits(self.params, [(x, 2, 9) for x in range(5)])
        self.assertEqual(kp.chi(full_row), full_row)
        single = kp.chi(StateArray.from_bits(self.params, [(0, 3, 4)]))
        self.assertEqual(sorted(single.set_bits()), [(0, 3, 4), (3, 3, 4)])

    def test_chi_is_a_bijection_on_each_row(self):
        """All 32 row values map to 32 distinct outputs."""
        for y in range(5):
            outputs = set()
            for value in range(32):
                state = StateArray.from_bits(self.params, [(x, y, 0) for x in range(5) if value >> x & 1])
                out = kp.chi(state)
                outputs.add(tuple(out.bit(x, y, 0) for x in range(5)))
            self.assertEqual(len(outputs), 32)

    def test_iota_touches_only_lane_zero(self):
        table = kp.round_constants(64, 24)
        for ir in range(24):
            state = random_state(self.rng, self.params)
            out = kp.iota(state, ir, table)
            self.assertEqual(out.lanes[1:], state.lanes[1:])
            self.assertEqual(kp.iota(out, ir, table), state)
        self.assertEqual(kp.iota(self.zero, 0).lane(0, 0), 0x0000000000000001)

    def test_iota_rejects_out_of_range_round(self):
        with self.assertRaises(InvalidRoundIndexError):
            kp.iota(self.zero, 24)
        with self.assertRaises(InvalidRoundIndexError):
            kp.iota(self.zero, -1)

    def test_linear_steps(self):
        """theta, rho and pi distribute over XOR."""
        for _ in range(1000):
            a = random_state(self.rng, self.params)
            b = random_state(self.rng, self.params)
            for step in (kp.theta, kp.rho, kp.pi):
                self.assertEqual(step(a ^ b), step(a) ^ step(b))

    def test_rho_and_pi_preserve_population(self):
        for _ in range(1000):
            a = random_state(self.rng, self.params)
            self.assertEqual(kp.rho(a).popcount(), a.popcount())
            self.assertEqual(kp.pi(a).popcount(), a.popcount())

    def test_rho_pi_iota_are_injective(self):
        seen = {'rho': set(), 'pi': set(), 'iota': set()}
        inputs = {random_state(self.rng, self.params) for _ in range(1000)}
        for state in inputs:
            seen['rho'].add(kp.rho(state).lanes)
            seen['pi'].add(kp.pi(state).lanes)
            seen['iota'].add(kp.iota(state, 3).lanes)
        for outputs in seen.values():
            self.assertEqual(len(outputs), len(inputs))


class RoundConstantTestCase(SimpleTestCase):
    def test_rc_matches_register_oracle(self):
        for t in range(600):
            self.assertEqual(kp.rc(t), bitlevel.rc(t))

    def test_keccak_f1600_constants(self):
        table = kp.generate_round_constants(PermutationParams(1600))
        self.assertEqual(table.constants, ROUND_CONSTANTS_1600)

    def test_only_sparse_positions_are_set(self):
        for b in kp.WIDTHS:
            params = PermutationParams(b)
            allowed = sum(1 << ((1 << j) - 1) for j in range(params.l + 1))
            table = kp.generate_round_constants(params)
            self.assertEqual(len(table), params.nr)
            for constant in table.constants:
                self.assertEqual(constant & ~allowed, 0)

    def test_small_width_is_the_truncated_stream(self):
        """w=8 keeps positions 0, 1, 3, 7 of the same rc stream."""
        table = kp.generate_round_constants(PermutationParams(200))
        for ir, constant in enumerate(table.constants):
            oracle = bitlevel.round_constant(ir, 8)
            self.assertEqual(constant, sum(bit << z for z, bit in enumerate(oracle)))
            self.assertEqual(constant, ROUND_CONSTANTS_1600[ir] & 0xFF)

    def test_table_lookup_out_of_range(self):
        with self.assertRaises(InvalidRoundIndexError):
            kp.round_constants(64, 24)[24]


class RoundFunctionTestCase(SimpleTestCase):
    def setUp(self):
        self.rng = random.Random(11)

    def test_rnd_is_the_composition(self):
        params = PermutationParams(1600)
        for _ in range(200):
            a = random_state(self.rng, params)
            ir = self.rng.randrange(24)
            self.assertEqual(kp.rnd(a, ir), kp.iota(kp.chi(kp.pi(kp.rho(kp.theta(a)))), ir))

    def test_rnd_on_zero_state(self):
        params = PermutationParams(1600)
        out = kp.rnd(StateArray.zero(params), 0)
        self.assertEqual(out.lanes, (ROUND_CONSTANTS_1600[0],) + (0,) * 24)

    def test_fused_rounds_match_composed_rounds(self):
        for b in kp.WIDTHS:
            params = PermutationParams(b)
            for _ in range(20):
                a = random_state(self.rng, params)
                composed = a
                for ir in range(params.nr):
                    composed = kp.rnd(composed, ir)
                self.assertEqual(kp.permute(a), composed)

    def test_keccak_f1600_zero_state(self):
        out = kp.keccak_p(BitString.zeros(1600), PermutationParams(1600))
        state = kp.string_to_state(out, PermutationParams(1600))
        self.assertEqual(state.lane(0, 0), ZERO_STATE_LANE_0)
        self.assertEqual(state.lane(1, 0), ZERO_STATE_LANE_1)

    def test_zero_rounds_is_identity(self):
        for b in kp.WIDTHS:
            s = BitString.from_int(self.rng.getrandbits(b), b)
            self.assertEqual(kp.keccak_p(s, PermutationParams(b, 0)), s)

    def test_keccak_p_width_mismatch(self):
        with self.assertRaises(InvalidWidthError):
            kp.keccak_p(BitString.zeros(200), PermutationParams(1600))

    def test_small_width_is_injective(self):
        params = PermutationParams(25)
        count = settings.KECCAK_ORACLE_SAMPLES_25
        outputs = {kp.keccak_p(BitString.from_int(value, 25), params) for value in range(count)}
        self.assertEqual(len(outputs), count)
        params = PermutationParams(200)
        inputs = {self.rng.getrandbits(200) for _ in range(settings.KECCAK_INJECTIVITY_SAMPLES_200)}
        outputs = {kp.keccak_p(BitString.from_int(value, 200), params) for value in inputs}
        self.assertEqual(len(outputs), len(inputs))


class BitLevelOracleTestCase(SimpleTestCase):
    """Lane-oriented steps against the bit-at-a-time evaluator."""

    def setUp(self):
        self.rng = random.Random(2019)

    def assert_steps_match(self, b, samples):
        params = PermutationParams(b)
        w = params.w
        for _ in range(samples):
            state = random_state(self.rng, params)
            array = bitlevel.from_state(state)
            ir = self.rng.randrange(params.nr)
            self.assertEqual(kp.theta(state), bitlevel.to_state(bitlevel.theta(array, w), params))
            self.assertEqual(kp.rho(state), bitlevel.to_state(bitlevel.rho(array, w), params))
            self.assertEqual(kp.pi(state), bitlevel.to_state(bitlevel.pi(array, w), params))
            self.assertEqual(kp.chi(state), bitlevel.to_state(bitlevel.chi(array, w), params))
            self.assertEqual(kp.iota(state, ir), bitlevel.to_state(bitlevel.iota(array, ir, w), params))
            self.assertEqual(kp.rnd(state, ir), bitlevel.to_state(bitlevel.rnd(array, ir, w), params))

    def test_width_25(self):
        self.assert_steps_match(25, settings.KECCAK_ORACLE_SAMPLES_25)

    def test_width_200(self):
        self.assert_steps_match(200, settings.KECCAK_ORACLE_SAMPLES_200)

    def test_width_1600(self):
        self.assert_steps_match(1600, settings.KECCAK_ORACLE_SAMPLES_1600)

    def test_every_width_single_round(self):
        for b in kp.WIDTHS:
            self.assert_steps_match(b, 5)

    def test_full_permutation_small_widths(self):
        for b, nr in ((25, 12), (200, 18)):
            params = PermutationParams(b, nr)
            for _ in range(50):
                value = self.rng.getrandbits(b)
                s = BitString.from_int(value, b)
                expected = bitlevel.keccak_p(s.bits(), b, nr)
                self.assertEqual(kp.keccak_p(s, params).bits(), expected)
