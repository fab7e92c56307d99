"""Reference element sets for the four bundled su(8) tables, transcribed
independently of the rendering code.

Each table maps a canonical label to its seven conjugate-pair rows and its
seven proper maximal bi-subalgebras, all as plain spinor literals.  Rows
are unordered {B, {W, What}} records: the golden comparison is set-level,
deliberately free of any renderer ordering choices.
"""

TABLES = {
    "C_[000]": {
        "center": (
            "S[000|000] S[001|000] S[010|000] S[011|000] "
            "S[100|000] S[101|000] S[110|000] S[111|000]"
        ),
        "rows": [
            ("S[000|000] S[010|000] S[100|000] S[110|000]",
             "S[000|001] S[010|001] S[100|001] S[110|001]",
             "S[001|001] S[011|001] S[101|001] S[111|001]"),
            ("S[000|000] S[001|000] S[100|000] S[101|000]",
             "S[000|010] S[001|010] S[100|010] S[101|010]",
             "S[010|010] S[011|010] S[110|010] S[111|010]"),
            ("S[000|000] S[011|000] S[100|000] S[111|000]",
             "S[000|011] S[011|011] S[100|011] S[111|011]",
             "S[001|011] S[010|011] S[101|011] S[110|011]"),
            ("S[000|000] S[001|000] S[010|000] S[011|000]",
             "S[000|100] S[001|100] S[010|100] S[011|100]",
             "S[100|100] S[101|100] S[110|100] S[111|100]"),
            ("S[000|000] S[010|000] S[101|000] S[111|000]",
             "S[000|101] S[010|101] S[101|101] S[111|101]",
             "S[001|101] S[011|101] S[100|101] S[110|101]"),
            ("S[000|000] S[001|000] S[110|000] S[111|000]",
             "S[000|110] S[001|110] S[110|110] S[111|110]",
             "S[010|110] S[011|110] S[100|110] S[101|110]"),
            ("S[000|000] S[011|000] S[101|000] S[110|000]",
             "S[000|111] S[011|111] S[101|111] S[110|111]",
             "S[001|111] S[010|111] S[100|111] S[111|111]"),
        ],
    },
    "C^{0}_{[100]}": {
        "center": (
            "S[000|000] S[001|000] S[010|000] S[011|000] "
            "S[000|100] S[001|100] S[010|100] S[011|100]"
        ),
        "rows": [
            ("S[000|000] S[001|000] S[010|000] S[011|000]",
             "S[100|000] S[101|000] S[110|000] S[111|000]",
             "S[100|100] S[101|100] S[110|100] S[111|100]"),
            ("S[000|000] S[010|000] S[000|100] S[010|100]",
             "S[000|001] S[010|001] S[000|101] S[010|101]",
             "S[001|001] S[011|001] S[001|101] S[011|101]"),
            ("S[000|000] S[010|000] S[001|100] S[011|100]",
             "S[100|001] S[110|001] S[101|101] S[111|101]",
             "S[101|001] S[111|001] S[100|101] S[110|101]"),
            ("S[000|000] S[001|000] S[000|100] S[001|100]",
             "S[000|010] S[001|010] S[000|110] S[001|110]",
             "S[010|010] S[011|010] S[010|110] S[011|110]"),
            # this determinant is pinned by closure: it must equal
            # B(row1) sqcap B(row4) and commute with its whole row
            ("S[000|000] S[001|000] S[010|100] S[011|100]",
             "S[100|010] S[101|010] S[110|110] S[111|110]",
             "S[110|010] S[111|010] S[100|110] S[101|110]"),
            ("S[000|000] S[011|000] S[000|100] S[011|100]",
             "S[000|011] S[011|011] S[000|111] S[011|111]",
             "S[001|011] S[010|011] S[001|111] S[010|111]"),
            ("S[000|000] S[011|000] S[001|100] S[010|100]",
             "S[100|011] S[111|011] S[101|111] S[110|111]",
             "S[101|011] S[110|011] S[100|111] S[111|111]"),
        ],
    },
    "C^{110}_{[001,100]}": {
        "center": (
            "S[000|000] S[010|000] S[101|001] S[111|001] "
            "S[001|100] S[011|100] S[100|101] S[110|101]"
        ),
        "rows": [
            ("S[000|000] S[010|000] S[101|001] S[111|001]",
             "S[100|000] S[110|000] S[001|001] S[011|001]",
             "S[101|100] S[111|100] S[000|101] S[010|101]"),
            ("S[000|000] S[010|000] S[001|100] S[011|100]",
             "S[001|000] S[011|000] S[000|100] S[010|100]",
             "S[100|001] S[110|001] S[101|101] S[111|101]"),
            ("S[000|000] S[010|000] S[100|101] S[110|101]",
             "S[101|000] S[111|000] S[001|101] S[011|101]",
             "S[000|001] S[010|001] S[100|100] S[110|100]"),
            ("S[000|000] S[101|001] S[001|100] S[100|101]",
             "S[000|010] S[101|011] S[001|110] S[100|111]",
             "S[010|010] S[111|011] S[011|110] S[110|111]"),
            ("S[000|000] S[101|001] S[011|100] S[110|101]",
             "S[100|010] S[001|011] S[111|110] S[010|111]",
             "S[110|010] S[011|011] S[101|110] S[000|111]"),
            ("S[000|000] S[111|001] S[001|100] S[110|101]",
             "S[001|010] S[110|011] S[000|110] S[111|111]",
             "S[011|010] S[100|011] S[010|110] S[101|111]"),
            ("S[000|000] S[111|001] S[011|100] S[100|101]",
             "S[101|010] S[010|011] S[110|110] S[001|111]",
             "S[111|010] S[000|011] S[100|110] S[011|111]"),
        ],
    },
    "C^{101000}_{[001,010,100]}": {
        "center": (
            "S[000|000] S[101|001] S[000|010] S[101|011] "
            "S[001|100] S[100|101] S[001|110] S[100|111]"
        ),
        "rows": [
            # the hatted half must be a coset of the center disjoint from
            # it (never the center complement itself)
            ("S[000|000] S[000|010] S[001|100] S[001|110]",
             "S[001|000] S[001|010] S[000|100] S[000|110]",
             "S[100|001] S[100|011] S[101|101] S[101|111]"),
            ("S[000|000] S[101|001] S[001|100] S[100|101]",
             "S[010|000] S[111|001] S[011|100] S[110|101]",
             "S[010|010] S[111|011] S[011|110] S[110|111]"),
            ("S[000|000] S[101|011] S[001|100] S[100|111]",
             "S[011|000] S[110|011] S[010|100] S[111|111]",
             "S[110|001] S[011|010] S[111|101] S[010|110]"),
            ("S[000|000] S[101|001] S[000|010] S[101|011]",
             "S[100|000] S[001|001] S[100|010] S[001|011]",
             "S[101|100] S[000|101] S[101|110] S[000|111]"),
            ("S[000|000] S[000|010] S[100|101] S[100|111]",
             "S[101|000] S[101|010] S[001|101] S[001|111]",
             "S[000|001] S[000|011] S[100|100] S[100|110]"),
            # determinant pinned as B(row2) sqcap B(row4)
            ("S[000|000] S[101|001] S[001|110] S[100|111]",
             "S[110|000] S[011|001] S[111|110] S[010|111]",
             "S[110|010] S[011|011] S[111|100] S[010|101]"),
            # determinant pinned as B(row3) sqcap B(row4)
            ("S[000|000] S[101|011] S[100|101] S[001|110]",
             "S[111|000] S[010|011] S[011|101] S[110|110]",
             "S[010|001] S[111|010] S[110|100] S[011|111]"),
        ],
    },
}
