//! Reference values for small qubit counts.

use super::oracle::{q, Q};

fn parse(s: &str) -> Q {
    match s.split_once('/') {
        Some((p, d)) => q(p.parse().unwrap(), d.parse().unwrap()),
        None => q(s.parse().unwrap(), 1),
    }
}

pub fn vector(s: &str) -> Vec<Q> {
    s.split(',').map(|x| parse(x.trim())).collect()
}

pub fn rational(s: &str) -> Q {
    parse(s)
}

/// β and entropy for three qubits.
pub const THREE_QUBITS: &[(&str, &str)] = &[
    ("1/2,1/2,1/2", "0"),
    ("1/2,0,0", "1/3"),
    ("1/6,1/6,1/6", "4/9"),
    ("0,0,0", "1/2"),
];

/// β and entropy for four qubits.
pub const FOUR_QUBITS: &[(&str, &str)] = &[
    ("1/2,1/2,1/2,1/2", "0"),
    ("1/2,1/2,0,0", "1/4"),
    ("1/2,1/6,1/6,1/6", "1/3"),
    ("1/2,0,0,0", "3/8"),
    ("1/4,1/4,1/4,1/4", "3/8"),
    ("1/5,1/5,1/10,1/10", "9/20"),
    ("1/6,1/6,1/6,0", "11/24"),
    ("1/7,1/14,1/14,1/14", "27/56"),
    ("0,0,0,0", "1/2"),
];

/// Five-qubit minimal combinations: ‖β‖², β (not sorted), and a spanning
/// vertex set as bit labels (bit 1 for +1/2).
pub const FIVE_QUBIT_COMBINATIONS: &[(&str, &str, &[&str])] = &[
    (
        "1/76",
        "3/38,1/19,1/19,1/38,1/38",
        &["01101", "01110", "10011", "10100", "11000"],
    ),
    (
        "1/52",
        "3/26,1/26,1/26,1/26,1/26",
        &["01111", "10001", "10011", "10100", "11000"],
    ),
    (
        "1/44",
        "1/11,1/11,1/22,1/22,1/22",
        &["01101", "01110", "10110", "10011", "11010"],
    ),
    (
        "1/26",
        "2/13,1/13,1/13,1/26,1/26",
        &["01111", "10011", "10100", "11000"],
    ),
    (
        "1/20",
        "1/10,1/10,1/10,1/10,1/10",
        &["01101", "01110", "10011", "11100"],
    ),
    (
        "1/16",
        "3/16,1/8,1/16,1/16,1/16",
        &["01111", "10011", "10101", "10110", "11000"],
    ),
    (
        "3/28",
        "3/14,3/14,1/14,1/14,1/14",
        &["01111", "10111", "11000"],
    ),
    ("1/8", "1/8,1/8,1/8,1/4,1/8", &["01110", "10011", "11101"]),
    (
        "9/44",
        "3/11,3/11,3/22,3/22,3/22",
        &["01111", "10111", "11001", "11010", "11100"],
    ),
    (
        "2/7",
        "2/7,2/7,2/7,1/7,1/7",
        &["01111", "10111", "11101", "11100"],
    ),
    (
        "9/20",
        "3/10,3/10,3/10,3/10,3/10",
        &["01111", "10111", "11011", "11101", "11110"],
    ),
];

/// Counts of critical values for L = 1..=7.
pub const COUNTS: [usize; 7] = [1, 2, 4, 9, 25, 115, 921];

/// Vertex sets above that do not solve to their β as printed, each with the
/// nearest set that does: one vertex replaced by a vertex on the supporting
/// hyperplane `α·β = ‖β‖²`.
pub const FIVE_QUBIT_MISPRINTS: &[(&str, &[&str])] = &[
    // 10011 is off the hyperplane; 10010 differs in one sign
    (
        "3/26,1/26,1/26,1/26,1/26",
        &["01111", "10001", "10010", "10100", "11000"],
    ),
    // 11010 is off the hyperplane; 11000 differs in one sign
    (
        "1/11,1/11,1/22,1/22,1/22",
        &["01101", "01110", "10110", "10011", "11000"],
    ),
    // 11101 is off the hyperplane; 11011 is the only other vertex on it
    ("2/7,2/7,2/7,1/7,1/7", &["01111", "10111", "11011", "11100"]),
];
