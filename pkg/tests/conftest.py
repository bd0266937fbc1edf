import pytest

from gonalkit import build_dihedral_product, paper_epimorphism, theorem_params

ODD_PRIMES = (3, 5, 7, 11)
GRID = tuple((p, k * (p - 1)) for p in ODD_PRIMES for k in range(4)) + ((2, 1), (2, 3))


@pytest.fixture(scope="session")
def grid_vectors():
    return {(p, n): paper_epimorphism(theorem_params(p, n)) for p, n in GRID}


@pytest.fixture(scope="session")
def G3():
    return build_dihedral_product(3)


# Brute-force oracles, deliberately independent of gonalkit.action.


def perm_image(G, x):
    """x as a pair of permutations of Z/p (r: i -> i+1, s: i -> -i), composed right to left."""
    p = G.p

    def factor(refl, rot):
        # s^refl r^rot applied to i: first r^rot, then s^refl
        return tuple(((-1) ** refl * (i + rot)) % p for i in range(p))

    return factor(x.a, x.b), factor(x.c, x.e)


def perm_compose(f, g):
    """f o g (apply g first)."""
    return tuple(f[g[i]] for i in range(len(f)))


def fixed_points_of(gv, h):
    """Points x<g_i> of S with h x <g_i> = x <g_i>, counted by testing x^-1 h x in <g_i>."""
    G = gv.group
    total = 0
    for g, m in zip(gv.images, gv.sig.periods):
        cyc = {G.power(g, k) for k in range(m)}
        hits = sum(1 for x in G.elements if G.mul(G.mul(G.inv(x), h), x) in cyc)
        assert hits % m == 0
        total += hits // m
    return total


def oracle_quotient_genus(gv, H):
    from gonalkit import rh_genus

    g = rh_genus(gv.group.order, gv.sig)
    ram = sum(fixed_points_of(gv, h) for h in H.members if not h.is_identity())
    rest = 2 * g - 2 - ram
    assert rest % (2 * H.order) == 0
    return rest // (2 * H.order) + 1
