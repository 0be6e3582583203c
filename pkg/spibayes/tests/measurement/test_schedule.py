from collections import Counter

import numpy as np
import pytest
from spibayes.exceptions import (ScheduleConsistencyError, ScheduleRangeError,
                                 UnsupportedDimensionError)
from spibayes.measurement import (FrequencySample, Part, SamplingSchedule, build_schedule,
                                  is_self_conjugate, validate_sample)

RE, IM = Part.REAL, Part.IMAG


def brute_force_representatives(width, height):
    """One frequency per conjugate class, found by scanning the whole grid."""
    seen = set()
    reps = []
    for fv in range(-(height // 2), height // 2):
        for fu in range(-(width // 2), width // 2):
            key = (fu % width, fv % height)
            if key in seen:
                continue
            seen.add(key)
            seen.add(((-fu) % width, (-fv) % height))
            reps.append((fu, fv))
    return reps


class TestSchedule:
    def test_dc_only(self):
        assert build_schedule(64, 64, 1).samples == (FrequencySample(0, 0, RE),)

    def test_thirteen_illuminations(self):
        expected = [(0, 0, RE), (1, 0, RE), (1, 0, IM), (0, 1, RE), (0, 1, IM),
                    (-1, 1, RE), (-1, 1, IM), (1, 1, RE), (1, 1, IM), (2, 0, RE), (2, 0, IM),
                    (0, 2, RE), (0, 2, IM)]
        assert list(build_schedule(64, 64, 13)) == [FrequencySample(*s) for s in expected]

    def test_thirteen_matches_exhaustive_sort(self):
        reps = [(fu, fv) for fu in range(-32, 32) for fv in range(-32, 32)
                if fv > 0 or (fv == 0 and fu >= 0)]
        reps.sort(key=lambda f: (f[0] ** 2 + f[1] ** 2, f[1], f[0]))
        expected = []
        for fu, fv in reps:
            expected.append((fu, fv, RE))
            if not is_self_conjugate(64, 64, fu, fv):
                expected.append((fu, fv, IM))
        assert [tuple(s) for s in build_schedule(64, 64, 13)] == expected[:13]

    def test_full_64(self):
        schedule = build_schedule(64, 64, 4096)
        assert len(schedule) == 4096
        per_frequency = Counter((s.fu, s.fv) for s in schedule)
        assert len(per_frequency) == 2050
        assert sorted(f for f, n in per_frequency.items() if n == 1) == [
            (-32, -32), (-32, 0), (0, -32), (0, 0)]

    @pytest.mark.parametrize(
        "width,height",
        [
            (2, 2),
            (4, 8),
            (8, 8),
            (16, 16),
            (64, 64)
        ]
    )
    def test_full_schedule_cardinality(self, width, height):
        schedule = build_schedule(width, height, width * height)
        assert len(schedule) == width * height
        assert len(set(schedule.samples)) == width * height
        real_only = [s for s in schedule
                     if s.part is RE and is_self_conjugate(width, height, s.fu, s.fv)]
        assert len(real_only) == 4

    @pytest.mark.parametrize("width,height", [(4, 4), (8, 6), (16, 16)])
    def test_covers_every_conjugate_class_once(self, width, height):
        schedule = build_schedule(width, height, width * height)
        scheduled = {((s.fu % width), (s.fv % height)) for s in schedule}
        classes = set()
        for fu, fv in scheduled:
            mirror = ((-fu) % width, (-fv) % height)
            assert mirror == (fu, fv) or mirror not in scheduled
            classes.add(frozenset([(fu, fv), mirror]))
        assert len(classes) == len(brute_force_representatives(width, height))

    def test_prefix_property(self):
        rng = np.random.default_rng(0)
        full = build_schedule(16, 16, 256)
        for _ in range(100):
            n, m = sorted(rng.choice(np.arange(1, 257), size=2, replace=False))
            shorter = build_schedule(16, 16, int(n))
            longer = build_schedule(16, 16, int(m))
            assert shorter.samples == longer.samples[:n]
            assert shorter == full.prefix(int(n))

    def test_deterministic(self):
        assert build_schedule(32, 32, 500) == build_schedule(32, 32, 500)

    def test_ordered_by_radius(self):
        radii = [s.fu ** 2 + s.fv ** 2 for s in build_schedule(64, 64, 4096)]
        assert radii == sorted(radii)

    @pytest.mark.parametrize(
        "width,height",
        [
            (63, 64),
            (64, 63),
            (3, 3),
            (0, 4),
            (-2, 4)
        ]
    )
    def test_unsupported_dimensions(self, width, height):
        with pytest.raises(UnsupportedDimensionError):
            build_schedule(width, height, 1)

    @pytest.mark.parametrize("count", [0, -1, 4097])
    def test_count_out_of_range(self, count):
        with pytest.raises(ScheduleRangeError):
            build_schedule(64, 64, count)

    @pytest.mark.parametrize("count", [1.0, "13", None])
    def test_count_must_be_int(self, count):
        with pytest.raises(TypeError):
            build_schedule(64, 64, count)

    def test_sampling_ratio(self):
        assert round(build_schedule(64, 64, 13).sampling_ratio, 4) == 0.0032

    @pytest.mark.parametrize("n", [0, 14])
    def test_prefix_out_of_range(self, n):
        with pytest.raises(ScheduleRangeError):
            build_schedule(64, 64, 13).prefix(n)


class TestSampleValidation:
    @pytest.mark.parametrize(
        "sample",
        [
            (0, 0, IM),  # DC has no imaginary part
            (-4, 0, IM),  # half-band bin
            (0, -4, IM),
            (-4, -4, IM),
            (-1, 0, RE),  # mirror of (1, 0)
            (0, -1, RE),  # mirror of (0, 1)
            (2, -3, RE),
            (4, 0, RE),  # outside [-4, 4)
            (0, 4, RE),
            (1, 1, "re"),  # part must be the enum
        ]
    )
    def test_invalid_samples(self, sample):
        with pytest.raises(ScheduleConsistencyError):
            validate_sample(8, 8, FrequencySample(*sample))

    @pytest.mark.parametrize(
        "sample",
        [
            (0, 0, RE),
            (-4, 0, RE),
            (3, 0, IM),
            (-3, 2, IM),
            (2, -4, IM),
            (-4, -4, RE),
        ]
    )
    def test_valid_samples(self, sample):
        validate_sample(8, 8, FrequencySample(*sample))

    def test_schedule_rejects_duplicates(self):
        with pytest.raises(ScheduleConsistencyError):
            SamplingSchedule(8, 8, [(0, 0, RE), (0, 0, RE)])

    def test_schedule_accepts_custom_order(self):
        schedule = SamplingSchedule(8, 8, [(1, 1, IM), (0, 0, RE)])
        assert schedule[0] == FrequencySample(1, 1, IM)
        assert len(schedule) == 2
