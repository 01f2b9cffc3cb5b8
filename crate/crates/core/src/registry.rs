//! Reference data transcribed from the source tables: the 18x24 generator
//! matrix of the extremal code with six-dimensional residue, the seven
//! `[I | M]` generator matrices whose residues are doubly even self-dual,
//! and the vectors that build the minimum-weight-8 realizable codes and the
//! maximal non-realizable codes from smaller codes.
//!
//! All vectors use the coordinate order of the 18x24 matrix.

use crate::error::{CodeError, Result};
use crate::gf2core::{parse_bits, BinaryCode};
use crate::named::named_code;
use crate::z4core::Z4Code;

pub const FIG1_ROWS: [&str; 18] = [
    "111111111111111100000000",
    "020000001111311100020000",
    "111111110000000011111111",
    "010010111013010210110100",
    "111000011130020100011110",
    "011110003020011101111000",
    "000000002022020000000000",
    "000000002220000200000000",
    "000000002000022200000000",
    "020020220000000000000000",
    "222000020000000000000000",
    "022220000000000000000000",
    "020000022020000000000000",
    "020020002000020000000000",
    "022000002000000200000000",
    "020000020000000000020200",
    "020020000000000000220000",
    "022000000000000000022000",
];

/// Labels of the residues of the seven `[I | M]` codes, in order.
pub const APPENDIX_LABELS: [&str; 7] = ["d12^2", "d10e7^2", "d8^3", "d6^4", "d4^6", "e8^3", "d16e8"];

pub const APPENDIX_BLOCKS: [[&str; 12]; 7] = [
    [
        "311222000022",
        "112302000002",
        "310010020022",
        "130221220020",
        "330202300020",
        "121311130200",
        "323111323220",
        "103111322100",
        "101133102210",
        "101331322003",
        "132202213331",
        "213131331333",
    ],
    [
        "333220002022",
        "132120002220",
        "132012002022",
        "332023220200",
        "002220333202",
        "213113033002",
        "213113101200",
        "233113312000",
        "220002220131",
        "121311022231",
        "321111002301",
        "123133202312",
    ],
    [
        "131000222202",
        "132122020002",
        "110232020022",
        "220001310020",
        "202001321022",
        "013310313220",
        "231133213000",
        "121331120100",
        "101131102032",
        "301111300221",
        "130221300133",
        "231330002113",
    ],
    [
        "311222200002",
        "130102222200",
        "020213122002",
        "220013010200",
        "033301131202",
        "213321132320",
        "312230333300",
        "121311003120",
        "121130132010",
        "303110112021",
        "112203132233",
        "031131002233",
    ],
    [
        "311002220220",
        "200333022220",
        "220022311222",
        "011031123102",
        "121330332122",
        "332121211120",
        "301123121212",
        "031110033232",
        "312231130030",
        "101231031201",
        "310310303221",
        "033123130021",
    ],
    [
        "213120000200",
        "103102202202",
        "132100002020",
        "131022002202",
        "222001310220",
        "002012130200",
        "220011032000",
        "022211320222",
        "202002022131",
        "000020203233",
        "222200023303",
        "022202201310",
    ],
    [
        "211302200000",
        "103102022022",
        "332320022222",
        "333020220220",
        "022001331331",
        "200230113111",
        "220013033113",
        "220231321111",
        "002231110131",
        "022013313031",
        "220231133321",
        "002233113310",
    ],
];

/// Vectors extending the realizable codes.
pub const REALIZABLE_VECTORS: [(&str, &str); 18] = [
    ("v7", "100001110011001101100110"),
    ("v81", "010000010000101000110011"),
    ("v82", "100001110010110100110011"),
    ("v83", "100001110010110100000000"),
    ("v841", "000011000001110101000100"),
    ("v842", "000011110000110000110000"),
    ("v91", "010000010000111100101000"),
    ("v92", "100001000010001001011001"),
    ("v931", "000010010010000100011011"),
    ("v932", "000011000000111101111011"),
    ("v94", "010000100000001101110010"),
    ("v95", "100001110010110100110011"),
    ("v96", "100001110000000000110011"),
    ("v101", "100001110000000000110011"),
    ("v102", "100000100010000100010111"),
    ("v103", "100000010010100001100101"),
    ("v11", "100000100000100101000111"),
    ("v12", "100000010000010100011101"),
];

/// Vectors extending `C6` to the maximal non-realizable codes.
pub const NONREALIZABLE_VECTORS: [(&str, &str); 14] = [
    ("w7", "000001100011000000011011"),
    ("w81", "000000110001111001111011"),
    ("w82", "000000110111010001110111"),
    ("w91", "000010010011010101000100"),
    ("w92", "000010010001000101010011"),
    ("w93", "000000000101000000000101"),
    ("w94", "000000000100001000001001"),
    ("w95", "000000000001010000010100"),
    ("w96", "000000000011100101110010"),
    ("w97", "000000000111100000101101"),
    ("w98", "000000000101000001010000"),
    ("w9", "000010010100101100100100"),
    ("w101", "000000000101011001100101"),
    ("w102", "000000000100101100000000"),
];

/// Minimum-weight-8 realizable codes: (name, parent, added vectors). The
/// three minimal codes have no parent.
pub const REALIZABLE_CODES: [(&str, &str, &[&str]); 19] = [
    ("C6", "", &[]),
    ("C7_1", "", &[]),
    ("C7_2", "", &[]),
    ("C7_3", "C6", &["v7"]),
    ("C8_1", "C7_3", &["v81"]),
    ("C8_2", "C7_3", &["v82"]),
    ("C8_3", "C7_3", &["v83"]),
    ("C8_4", "C6", &["v841", "v842"]),
    ("C9_1", "C8_3", &["v91"]),
    ("C9_2", "C8_4", &["v92"]),
    ("C9_3", "C7_3", &["v931", "v932"]),
    ("C9_4", "C8_3", &["v94"]),
    ("C9_5", "C8_1", &["v95"]),
    ("C9_6", "C8_3", &["v96"]),
    ("C10_1", "C9_4", &["v101"]),
    ("C10_2", "C9_4", &["v102"]),
    ("C10_3", "C9_4", &["v103"]),
    ("C11", "C10_1", &["v11"]),
    ("C12", "C11", &["v12"]),
];

/// Maximal non-realizable codes: (name, vectors added to `C6`, m, N).
pub const NONREALIZABLE_CODES: [(&str, &[&str], usize, u64); 10] = [
    ("N9_1", &["w7", "w81", "w91"], 14, 159),
    ("N9_2", &["w7", "w81", "w92"], 14, 372),
    ("N9_3", &["w7", "w81", "w93"], 14, 170),
    ("N9_4", &["w7", "w82", "w94"], 14, 388),
    ("N9_5", &["w7", "w82", "w95"], 14, 228),
    ("N9_6", &["w7", "w82", "w96"], 14, 254),
    ("N9_7", &["w7", "w82", "w97"], 14, 287),
    ("N9_8", &["w7", "w82", "w98"], 14, 488),
    ("N10_1", &["w7", "w81", "w9", "w101"], 23, 299),
    ("N10_2", &["w7", "w81", "w9", "w102"], 23, 378),
];

/// Table of counts by dimension: (k, total, R8, R4, N8, N4).
pub const COUNTS: [(usize, usize, usize, usize, usize, usize); 7] = [
    (12, 9, 1, 8, 0, 0),
    (11, 21, 1, 20, 0, 0),
    (10, 49, 3, 44, 0, 2),
    (9, 60, 6, 40, 4, 10),
    (8, 32, 4, 16, 8, 4),
    (7, 7, 3, 2, 2, 0),
    (6, 1, 1, 0, 0, 0),
];

fn digits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

/// FNV-1a over the rows, each followed by a newline.
pub fn checksum<S: AsRef<str>>(rows: &[S]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for r in rows {
        for b in r.as_ref().bytes().chain(std::iter::once(b'\n')) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// The code generated by the 18x24 matrix.
pub fn fig1_code() -> Z4Code {
    let rows: Vec<Vec<u8>> = FIG1_ROWS.iter().map(|r| digits(r)).collect();
    Z4Code::from_entry_rows(24, &rows).expect("transcribed matrix is well formed")
}

/// The code generated by `[I_12 | M]` for block `i`.
pub fn appendix_code(i: usize) -> Result<Z4Code> {
    let block = APPENDIX_BLOCKS
        .get(i)
        .ok_or_else(|| CodeError::UnknownLabel(format!("appendix block {i}")))?;
    let rows: Vec<Vec<u8>> = block
        .iter()
        .enumerate()
        .map(|(r, m)| {
            let mut row = vec![0u8; 12];
            row[r] = 1;
            row.extend(digits(m));
            row
        })
        .collect();
    Z4Code::from_entry_rows(24, &rows)
}

pub fn vector(name: &str) -> Result<u128> {
    REALIZABLE_VECTORS
        .iter()
        .chain(NONREALIZABLE_VECTORS.iter())
        .find(|(n, _)| *n == name)
        .map(|(_, v)| parse_bits(v))
        .unwrap_or_else(|| Err(CodeError::UnknownLabel(name.to_string())))
}

/// Residue of the 18x24 code.
pub fn c6() -> BinaryCode {
    fig1_code().residue()
}

/// Builds a named realizable or non-realizable code in the reference
/// coordinates (`C6`, `C7_1`, …, `C12`, `N9_1`, …, `N10_2`).
pub fn table_code(name: &str) -> Result<BinaryCode> {
    match name {
        "C6" => return Ok(c6()),
        "C7_1" | "C7_2" => return named_code(name),
        _ => {}
    }
    if let Some((_, parent, vs)) = REALIZABLE_CODES.iter().find(|(n, _, _)| *n == name) {
        let mut code = table_code(parent)?;
        for v in vs.iter() {
            code = code.span_with(vector(v)?)?;
        }
        return Ok(code);
    }
    if let Some((_, vs, _, _)) = NONREALIZABLE_CODES.iter().find(|(n, _, _, _)| *n == name) {
        let mut code = c6();
        for v in vs.iter() {
            code = code.span_with(vector(v)?)?;
        }
        return Ok(code);
    }
    Err(CodeError::UnknownLabel(name.to_string()))
}

/// Dimension encoded in a table name (`C9_4` -> 9, `N10_1` -> 10, `C11` -> 11).
pub fn table_dim(name: &str) -> usize {
    name[1..]
        .split('_')
        .next()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}


#[cfg(test)]
const FIG1_CHECKSUM: u64 = 0x085d3ff31fb7b10b;
#[cfg(test)]
const APPENDIX_CHECKSUM: u64 = 0xc4104d4db41c82ed;
#[cfg(test)]
const VECTORS_CHECKSUM: u64 = 0x399ca9f96525eced;
