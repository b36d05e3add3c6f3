"""Cross-checks that tie the worked examples together across modules."""

import pytest

from modrep.errors import DimensionMismatch
from modrep.fieldcore import field_make
from modrep.goldens import Workbench, run_paper_suite
from modrep.linalg import Subspace
from modrep.modalg import (
    GroupAlgebra,
    direct_sum,
    induce_module,
    is_irreducible,
    modules_isomorphic,
    permutation_module,
    radical_and_socle_series,
    regular_module,
    socle_chain,
    sub_quotient,
    trivial_module,
)
from modrep.permgroup import builtin, group_generate

GF4 = field_make(2, 2)


@pytest.fixture(scope="module")
def wb():
    return Workbench(seed=0)


def test_permutation_module_splits_as_trivial_plus_s4(wb):
    an = wb.a5()
    smap = wb.s_map()
    w = permutation_module(an.algebra)
    s1 = an.simples.simples[smap["S1"]]
    s4 = an.simples.simples[smap["S4"]]
    assert modules_isomorphic(w, direct_sum([s1, s4]), 0)


def test_induced_t2_reducible_with_s2_socle(wb):
    an = wb.a5()
    a4 = wb.a4()
    tmap = wb.t_map()
    smap = wb.s_map()
    ind = induce_module(a4.simples.simples[tmap["T2"]], an.algebra)
    verdict = is_irreducible(ind, 11)
    assert not verdict.irreducible
    # uniserial S3/S1/S2: any proper witness has dimension 2 or 3
    assert verdict.witness.dim in (2, 3)
    socle = socle_chain(ind, an.radical)[1]
    assert socle.dim == 2
    soc_mod, _ = sub_quotient(ind, socle)
    assert modules_isomorphic(soc_mod, an.simples.simples[smap["S2"]], 0)


def test_induction_from_trivial_subgroup_is_regular(wb):
    an = wb.a4()
    triv_table = group_generate([], an.algebra.group.degree)
    triv_alg = GroupAlgebra(triv_table, GF4)
    ind = induce_module(trivial_module(triv_alg), an.algebra)
    assert ind.dim == 12
    assert modules_isomorphic(ind, regular_module(an.algebra), 0)


def test_loewy_rejects_foreign_radical(wb):
    an = wb.a4()
    with pytest.raises(DimensionMismatch):
        radical_and_socle_series(
            trivial_module(an.algebra), Subspace.zero(GF4, 5), an.simples.simples
        )


def test_paper_suite_stable_across_seeds():
    names0 = [r.name for r in run_paper_suite(0)]
    results5 = run_paper_suite(5)
    assert [r.name for r in results5] == names0
    assert all(r.passed for r in results5)
