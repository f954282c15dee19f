"""Bundled reference data: digests, code rebuild checks, helper families."""

import hashlib
from importlib import resources

import pytest

from lcdcodes import bounds, codes, gf, refdata
from lcdcodes.refdata import (D3_SMALL, FIG_CODE_PARAMS, GB_RESIDUES_BINARY,
                              GB_RESIDUES_TERNARY, binary_weight2_highrate_code,
                              build_paper_code, build_parity_family,
                              list_paper_code_ids, paper_code_params,
                              parity_family_check_matrix, t_code_table)

ASSET_DIGESTS = {
    "m26.txt": "5668c1c799a6ba689c8e66ac590d646ddb0479aa2a08a60021457ff70faeb570",
    "m36_t.txt": "79272a2703bcc514cbab6ed23157298c6023952f2d58402a7e3552c5f1b798ce",
    "m_11_5_5.txt": "f00dcc058d00e32a7afe29ff024724e0ef3419a9ebed4794affe51509888aabd",
    "m_12_6_5.txt": "92bab38cedae68060992ead03041c1c1ed3b2d15e952858ad672d91575e8c009",
    "m_13_6_6.txt": "e9a88e135acf66afd9948a546ac3f861f2ef02d5b6ca2fa7ca4a8c6c13c17c4d",
    "m_13_7_5.txt": "cebeae946a5dc7d91cfb764f05d3572ede8232bfed424a301861d6f77175b575",
    "m_14_7_6.txt": "38e6e0642438dabf293a73ccf95882721c16d501e6f5aa375e3d6b52374b853c",
    "m_14_8_5.txt": "d4d7e6f519ee0e8f0a09ae31e66e913a5ff5a4fc2ed7c41b0dc090541235c4a3",
    "m_15_5_8.txt": "724c500e8cdfc2f8cf8ddf9d16c7c82def403278b8b9b27741c535fff2ef92c9",
    "m_17_5_9.txt": "a459508de937d084c8ed5c36d3c8f2003594119a4358aaa0f1ee96fc61cd0f39",
    "m_18_6_9.txt": "c0d5a32bb53fc425ea48fa0fcce7558f5d0bce62683b44ae81d98a519a308159",
    "t_codes.txt": "1c6194f8fc225dc596c2511e84e7403c47d159ef52afaf517ffa895437e5ba91",
}


def test_asset_digests():
    """Transcription guard: any edit to a data file fails loudly here."""
    root = resources.files("lcdcodes.data")
    for name, want in ASSET_DIGESTS.items():
        got = hashlib.sha256(root.joinpath(name).read_bytes()).hexdigest()
        assert got == want, name


def test_t_code_table_shape():
    table = t_code_table()
    assert len(table) == 29
    for n, (d, m) in table.items():
        assert len(m) == 40
        assert sum(int(ch) for ch in m) == n


def test_all_t_codes_rebuild_as_stated():
    for n, (d, _) in sorted(t_code_table().items()):
        c = build_paper_code(f"T{n}")
        assert (c.q, c.n, c.k) == (3, n, 4)
        assert codes.min_weight(c) == d, n
        assert codes.is_lcd(c), n
        assert codes.dual_distance_at_least_2(c), n


def test_fig_codes_rebuild_as_stated():
    for n, k, d in FIG_CODE_PARAMS:
        c = build_paper_code(f"M{n}-{k}-{d}")
        assert (c.q, c.n, c.k) == (3, n, k)
        assert codes.min_weight(c) == d
        assert codes.is_lcd(c)


def test_chain_codes():
    for i in range(7, 33):
        c = build_paper_code(f"M36-chain-{i}")
        assert (c.q, c.n, c.k) == (3, i + 4, i)
        assert codes.is_lcd(c), i
        assert not codes.min_weight_at_most(c, 2) and codes.min_weight_at_most(c, 3)


def test_h25_h26():
    for cid, n in [("H25", 25), ("H26", 26)]:
        c = build_paper_code(cid)
        assert (c.q, c.n, c.k) == (2, n, n - 5)
        assert codes.is_lcd(c)
        assert not codes.min_weight_at_most(c, 2) and codes.min_weight_at_most(c, 3)


def test_id_listing_and_aliases():
    ids = list_paper_code_ids()
    assert len(ids) == 29 + 9 + 2 + 26
    assert paper_code_params("T39") == (3, 39, 4, 25)
    assert paper_code_params("m36_chain_7") == (3, 11, 7, 3)
    with pytest.raises(KeyError):
        build_paper_code("T12")
    with pytest.raises(KeyError):
        build_paper_code("X99")


def test_gb_residue_sets():
    assert set(GB_RESIDUES_BINARY) == {0, 6, 9, 13, 16, 21, 24, 28}
    assert set(GB_RESIDUES_TERNARY) == {0, 6, 10, 14, 19, 23, 27, 32, 36}


def test_d3_small_range_cells():
    # length-20 rows keep their unresolved two-value cells as tuples
    assert D3_SMALL[20][7] == (8, 9)
    assert D3_SMALL[20][9] == (7, 8)
    assert D3_SMALL[20][12] == (5, 6)
    assert D3_SMALL[20][15] == (3, 4)
    assert D3_SMALL[12][4] == 6
    assert D3_SMALL[18][4] == 10


def test_parity_family():
    h = parity_family_check_matrix(10, 2)
    gm = gf.gram(h)
    assert gm == gf.from_rows(3, [[0, 2], [2, 0]])
    for n, i in [(10, 2), (12, 4), (7, 3), (9, 8)]:
        c = build_parity_family(n, i)
        assert (c.n, c.k) == (n, n - i)
        assert codes.is_lcd(c)
        assert not codes.min_weight_at_most(c, 1) and codes.min_weight_at_most(c, 2)


def test_parity_family_single_tail_column():
    c = build_parity_family(3, 2)
    assert (c.n, c.k) == (3, 1)
    assert codes.is_lcd(c)


def test_parity_family_domain():
    with pytest.raises(ValueError):
        parity_family_check_matrix(5, 5)
    with pytest.raises(ValueError):
        parity_family_check_matrix(5, 1)


def test_binary_weight2_highrate_code():
    for n in range(27, 33):
        c = binary_weight2_highrate_code(n, 5)
        assert (c.q, c.n, c.k) == (2, n, n - 5)
        assert codes.is_lcd(c)
        assert not codes.min_weight_at_most(c, 1) and codes.min_weight_at_most(c, 2)


def test_m36_chain_is_nested():
    # each chain code extends the previous one by a generator row
    a = build_paper_code("M36-chain-8")
    b = build_paper_code("M36-chain-9")
    arr_a = a.gen.arr[:, 8:]
    arr_b = b.gen.arr[:, 9:]
    assert (arr_a == arr_b[:8]).all()
