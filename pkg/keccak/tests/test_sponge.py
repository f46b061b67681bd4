import random
from unittest.mock import patch

from django.test import SimpleTestCase

from keccak import sponge as sponge_module
from keccak.bits import BitString
from keccak.exceptions import InvalidParameterError
from keccak.permutation import PermutationParams, permute_lanes
from keccak.sponge import SpongeHasher, SpongeInput, SpongeParams, pad10star1, sponge

SHA3_256_EMPTY = 'a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a'


class PaddingTestCase(SimpleTestCase):
    def test_short_padding(self):
        self.assertEqual(pad10star1(8, 6), BitString.from_text('11'))

    def test_full_block_of_padding(self):
        pad = pad10star1(8, 8)
        self.assertEqual(pad, BitString.from_text('10000001'))
        self.assertEqual(8 + pad.length, 16)

    def test_padding_property(self):
        """(m + len(pad)) is a multiple of x, pad starts and ends with 1."""
        rng = random.Random(3)
        for _ in range(10000):
            x = rng.randint(1, 4096)
            m = rng.randint(0, 20000)
            pad = pad10star1(x, m)
            self.assertEqual((m + pad.length) % x, 0)
            self.assertGreaterEqual(pad.length, 2)
            self.assertEqual(pad[0], 1)
            self.assertEqual(pad[-1], 1)
            self.assertEqual(pad.popcount(), 2)

    def test_zero_modulus_rejected(self):
        with self.assertRaises(InvalidParameterError):
            pad10star1(0, 5)


class SpongeParamsTestCase(SimpleTestCase):
    def test_rate_plus_capacity_is_width(self):
        with self.assertRaises(InvalidParameterError):
            SpongeParams(1000, 500)
        with self.assertRaises(InvalidParameterError):
            SpongeParams(0, 1600)
        params = SpongeParams.for_capacity(512)
        self.assertEqual((params.r, params.c, params.b), (1088, 512, 1600))

    def test_output_length_must_be_positive(self):
        with self.assertRaises(InvalidParameterError):
            SpongeInput(BitString.zeros(0), 0)


class SpongeTestCase(SimpleTestCase):
    def setUp(self):
        self.params = SpongeParams(1088, 512)
        self.rng = random.Random(5)

    def test_sha3_256_empty_message(self):
        out = sponge(self.params, SpongeInput(BitString.from_text('01'), 256))
        self.assertEqual(out.hex(), SHA3_256_EMPTY)

    def test_prefix_property(self):
        n = BitString.from_int(self.rng.getrandbits(3001), 3001)
        long_output = sponge(self.params, SpongeInput(n, 5000))
        for d in (1, 7, 8, 255, 1088, 1089, 4097):
            out = sponge(self.params, SpongeInput(n, d))
            self.assertEqual(out.length, d)
            self.assertEqual(out, long_output.prefix(d))

    def test_deterministic(self):
        n = BitString.from_bytes(b'batch mode')
        self.assertEqual(sponge(self.params, SpongeInput(n, 512)), sponge(self.params, SpongeInput(n, 512)))

    def count_permutations(self, message_bits):
        n = BitString.zeros(message_bits)
        with patch.object(sponge_module, 'permute_lanes', wraps=permute_lanes) as spy:
            sponge(self.params, SpongeInput(n, 256))
        return spy.call_count

    def test_block_count(self):
        """r-2 message bits fit one block with padding "11"; r-1 bits need two."""
        self.assertEqual(self.count_permutations(1088 - 2), 1)
        self.assertEqual(self.count_permutations(1088 - 1), 2)

    def test_multi_squeeze_counts_permutations(self):
        n = BitString.zeros(0)
        with patch.object(sponge_module, 'permute_lanes', wraps=permute_lanes) as spy:
            sponge(self.params, SpongeInput(n, 3 * 1088 + 1))
        self.assertEqual(spy.call_count, 1 + 3)

    def test_small_width_sponge(self):
        params = SpongeParams(40, 160, PermutationParams(200))
        out = sponge(params, SpongeInput(BitString.from_bytes(b'abc'), 100))
        self.assertEqual(out.length, 100)
        self.assertEqual(out, sponge(params, SpongeInput(BitString.from_bytes(b'abc'), 200)).prefix(100))


class SpongeHasherTestCase(SimpleTestCase):
    def setUp(self):
        self.params = SpongeParams(1088, 512)
        self.suffix = BitString.from_text('01')
        self.rng = random.Random(9)

    def one_shot(self, message, d):
        return sponge(self.params, SpongeInput(BitString.from_bytes(message) + self.suffix, d))

    def test_streaming_equals_one_shot(self):
        for length in (0, 1, 135, 136, 137, 272, 1000):
            message = bytes(self.rng.getrandbits(8) for _ in range(length))
            hasher = SpongeHasher(self.params, self.suffix)
            position = 0
            while position < length:
                step = self.rng.randint(1, 300)
                hasher.update(message[position:position + step])
                position += step
            self.assertEqual(hasher.squeeze_bits(256), self.one_shot(message, 256))

    def test_reading_does_not_finalize(self):
        hasher = SpongeHasher(self.params, self.suffix)
        hasher.update(b'abc')
        first = hasher.squeeze(32)
        self.assertEqual(hasher.squeeze(32), first)
        hasher.update(b'def')
        self.assertEqual(hasher.squeeze_bits(256), self.one_shot(b'abcdef', 256))

    def test_copy_is_independent(self):
        hasher = SpongeHasher(self.params, self.suffix)
        hasher.update(b'x' * 200)
        clone = hasher.copy()
        clone.update(b'y')
        self.assertEqual(hasher.squeeze_bits(256), self.one_shot(b'x' * 200, 256))
        self.assertEqual(clone.squeeze_bits(256), self.one_shot(b'x' * 200 + b'y', 256))

    def test_partial_final_byte_keeps_low_bits(self):
        hasher = SpongeHasher(self.params, self.suffix)
        full = hasher.squeeze(2)
        partial = hasher.squeeze_bits(13)
        self.assertEqual(partial.data, bytes([full[0], full[1] & 0x1F]))

    def test_rate_must_be_byte_aligned(self):
        with self.assertRaises(InvalidParameterError):
            SpongeHasher(SpongeParams(1084, 516))
