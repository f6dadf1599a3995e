import pytest

from colorpart.avoidance import (
    Sense,
    avoids_all,
    avoids_vincular,
    begins_with_ascent,
)
from colorpart.bijections import (
    CLASS2_CODOMAIN,
    CLASS2_DOMAIN,
    CLASS3A_CODOMAIN,
    CLASS3A_DOMAIN,
    CLASS3B_CODOMAIN,
    CLASS3B_DOMAIN,
    F_DOMAIN,
    G_DOMAIN,
    PAT_1_23,
    PAT_12_3,
    PAT_214_3,
    DomainError,
    bij_class2_pairs,
    bij_class2_pairs_inv,
    bij_class3_colorswap,
    bij_class3_colorswap_inv,
    bij_class3_structural,
    bij_class3_structural_inv,
    bij_f,
    bij_f_inv,
    bij_g,
    block_descent_tau,
    verify_bijection,
)
from colorpart.core import ColoredPartition, parse_blocks, parse_permutation
from colorpart.enumeration import iter_avoiders
from colorpart.formulas import bell, pair4_sequence


class TestF:
    def test_worked_example(self):
        sigma = parse_blocks("1^24^1/2^1/3^26^1/5^1/7^2")
        q = bij_f(sigma)
        assert q.entries == (7, 3, 8, 6, 1, 5, 4, 2)
        assert bij_f_inv(q) == sigma

    def test_base_cases(self):
        assert bij_f(ColoredPartition((1,), (1,))).entries == (2, 1)
        assert bij_f(ColoredPartition((1,), (2,))).entries == (1, 2)

    def test_round_trip_exhaustive(self):
        for n in range(1, 7):
            images = set()
            for sigma in iter_avoiders(n, 2, F_DOMAIN):
                q = bij_f(sigma)
                assert q.n == n + 1
                assert avoids_vincular(q, (PAT_12_3, PAT_214_3))
                assert bij_f_inv(q) == sigma
                images.add(q)
            # bijective onto S_{n+1} avoiding both dashed patterns
            assert len(images) == pair4_sequence(n)[n - 1]

    def test_domain_enforced(self):
        with pytest.raises(DomainError):
            bij_f(parse_blocks("1^12^1"))  # word 1^11^1 contains 1^11^1


class TestTau:
    def test_examples(self):
        # blocks listed by decreasing minima, min first then decreasing
        sigma = parse_blocks("1^15^17^1/2^13^18^1/4^1/6^1")
        assert block_descent_tau(sigma).entries == (6, 4, 2, 8, 3, 1, 7, 5)

    def test_image_avoids_1_23(self):
        for n in range(1, 7):
            images = set()
            for sigma in iter_avoiders(n, 1, ()):
                q = block_descent_tau(sigma)
                assert avoids_vincular(q, (PAT_1_23,))
                images.add(q)
            assert len(images) == bell(n)


class TestG:
    def test_small_example(self):
        q = bij_g(parse_blocks("1^2"))
        assert q.entries == (2, 3, 1)

    def test_image_properties(self):
        for n in range(1, 6):
            images = set()
            for sigma in iter_avoiders(n, 2, G_DOMAIN):
                q = bij_g(sigma)
                assert q.n == n + 2
                assert begins_with_ascent(q)
                assert avoids_vincular(q, (PAT_12_3,))
                assert q[1] == n + 2
                images.add(q)
            assert len(images) == (n + 1) * bell(n)


class TestClass2:
    def test_counts_and_round_trip(self):
        for n in range(1, 7):
            domain = list(iter_avoiders(n, 2, CLASS2_DOMAIN))
            assert len(domain) == 2 ** n + n - 1
            images = set()
            for sigma in domain:
                tau = bij_class2_pairs(sigma)
                assert avoids_all(tau, CLASS2_CODOMAIN, Sense.PATTERN)
                assert bij_class2_pairs_inv(tau) == sigma
                images.add(tau)
            assert len(images) == len(domain)


@pytest.mark.parametrize("fwd,inv,domain,codomain", [
    (bij_class3_structural, bij_class3_structural_inv,
     CLASS3A_DOMAIN, CLASS3A_CODOMAIN),
    (bij_class3_colorswap, bij_class3_colorswap_inv,
     CLASS3B_DOMAIN, CLASS3B_CODOMAIN),
])
class TestClass3:
    def test_counts_and_round_trip(self, fwd, inv, domain, codomain):
        for n in range(1, 8):
            members = list(iter_avoiders(n, 2, domain))
            assert len(members) == 2 * n
            images = set()
            for sigma in members:
                tau = fwd(sigma)
                assert avoids_all(tau, codomain, Sense.PATTERN)
                assert inv(tau) == sigma
                images.add(tau)
            assert len(images) == 2 * n


class TestVerifyReports:
    @pytest.mark.parametrize("name", ["f", "tau", "g", "class2",
                                      "class3a", "class3b"])
    def test_all_pass_small(self, name):
        report = verify_bijection(name, 5)
        assert report.ok, report

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            verify_bijection("nope", 3)
