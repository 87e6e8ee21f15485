#![allow(dead_code)]

use std::collections::BTreeSet;

use sympair::symcore::Partition;

/// The published parity table, `[g][k]`, verbatim in its exponent notation.
pub const PRINTED: &[&[&[&str]]] = &[
    &[&["0"]],
    &[&["2^1 1^1"], &["0"]],
    &[&["4^1 1^2", "2^3"], &["2^1 1^1"], &["0"]],
    &[
        &["4^1 2^2 1^1", "4^1 2^1 1^3"],
        &["4^1 1^2", "4^1 2^1", "2^3"],
        &["2^1 1^1"],
        &["0"],
    ],
    &[
        &["8^1 2^1 1^2", "4^1 2^3 1^1", "8^1 1^4", "4^3"],
        &["4^1 2^1 1^3", "4^1 2^2 1^1"],
        &["4^1 1^2", "2^1 4^1", "2^3"],
        &["2^1 1^1"],
        &["0"],
    ],
    &[
        &["8^1 2^2 1^3", "8^1 2^1 1^5", "8^1 2^3 1^1", "4^3 2^1 1^1"],
        &["4^1 2^3 1^2", "8^1 2^2", "8^1 1^4", "4^3"],
        &["4^2 2^1 1^3", "4^1 2^2 1^1"],
        &["4^1 1^2", "2^3"],
        &["2^1 1^1"],
        &["0"],
    ],
    &[
        &[
            "8^1 4^1 2^2 1^2",
            "8^1 2^3 1^4",
            "8^1 4^2 1^2",
            "8^1 4^1 1^6",
            "4^3 2^3",
            "8^1 2^5",
        ],
        &[
            "8^1 4^1 2^1 1^1",
            "8^1 2^2 1^3",
            "8^1 2^3 1^1",
            "8^1 4^1 1^3",
            "4^3 2^1 1^1",
            "8^1 2^1 1^5",
        ],
        &["4^1 2^3 1^2", "8^1 1^4", "4^3"],
        &["4^1 2^1 1^3", "4^1 2^2 1^1"],
        &["4^1 1^2", "2^3"],
        &["2^1 1^1"],
        &["0"],
    ],
    &[
        &[
            "8^1 4^1 2^3 1^3",
            "8^1 4^1 2^2 1^5",
            "8^1 4^2 2^1 1^3",
            "8^1 4^2 2^2 1^1",
            "8^1 4^1 2^4 1^1",
            "8^1 4^1 2^1 1^7",
        ],
        &[
            "8^1 4^1 2^1 1^4",
            "8^1 4^2 2^1",
            "8^1 4^2 1^2",
            "8^1 4^1 2^3",
            "8^1 4^1 1^6",
            "8^1 2^3 1^4",
            "8^1 2^5",
            "4^3 2^3",
        ],
        &[
            "8^1 4^1 2^1 1^1",
            "8^1 4^1 1^3",
            "8^1 2^3 1^1",
            "8^1 2^2 1^3",
            "8^1 2^1 1^5",
            "4^3 2^1 1^1",
        ],
        &[
            "8^1 2^1 1^2",
            "4^1 2^3 1^2",
            "8^1 4^1",
            "8^1 2^2",
            "8^1 1^4",
            "4^3",
        ],
        &["4^1 2^2 1^1", "4^1 2^1 1^3"],
        &["4^1 2^1", "4^1 1^2", "2^3"],
        &["2^1 1^1"],
        &["0"],
    ],
];

/// Two printed cells list partitions of the wrong size. Each entry is
/// `(g, k, printed, intended)`.
pub const SIZE_TYPOS: [(u32, u32, &str, &str); 2] = [
    (5, 0, "4^1 2^3 1^1", "4^1 2^3 1^2"),
    (6, 2, "4^2 2^1 1^3", "4^1 2^1 1^3"),
];

pub fn printed(g: u32, k: u32) -> BTreeSet<Partition> {
    PRINTED[g as usize - 1][k as usize]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

pub fn corrected(g: u32, k: u32) -> BTreeSet<Partition> {
    PRINTED[g as usize - 1][k as usize]
        .iter()
        .map(|s| {
            SIZE_TYPOS
                .iter()
                .find(|t| t.0 == g && t.1 == k && t.2 == *s)
                .map_or(*s, |t| t.3)
        })
        .map(|s| s.parse().unwrap())
        .collect()
}

/// Cells where `(8,1)` pairs oddly but is not printed. Both are pairings on
/// `N_4`, where the printed table behaves as if parts were capped at
/// `2·4 - 1 = 7` instead of `2g - 1`.
pub fn missing_eight_one(g: u32, k: u32) -> bool {
    matches!((g, k), (5, 1) | (6, 2))
}
