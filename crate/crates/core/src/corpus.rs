//! Named truth tables used in docs, tests and the CLI.

use crate::boolfn::TruthTable;
use crate::characterize::deutsch_jozsa;

pub struct CorpusEntry {
    pub name: &'static str,
    pub table: String,
    pub description: &'static str,
}

const TWO_BIT: [(&str, &str, &str); 16] = [
    ("const0", "0000", "constant 0"),
    ("and2", "0001", "x1 AND x2"),
    ("x1_and_not_x2", "0010", "x1 AND NOT x2"),
    ("x1", "0011", "dictator x1"),
    ("not_x1_and_x2", "0100", "NOT x1 AND x2"),
    ("x2", "0101", "dictator x2"),
    ("xor2", "0110", "x1 XOR x2"),
    ("or2", "0111", "x1 OR x2"),
    ("nor2", "1000", "NOT (x1 OR x2)"),
    ("xnor2", "1001", "NOT (x1 XOR x2)"),
    ("not_x2", "1010", "NOT x2"),
    ("x2_implies_x1", "1011", "x2 -> x1"),
    ("not_x1", "1100", "NOT x1"),
    ("x1_implies_x2", "1101", "x1 -> x2"),
    ("nand2", "1110", "NOT (x1 AND x2)"),
    ("const1", "1111", "constant 1"),
];

/// All two-bit functions by name, plus `deutsch`, `maj3`, `and_or3`
/// (`x1 AND (x2 OR x3)`), `parity3`, and the Deutsch-Jozsa promise tables
/// `dj2` and `dj4`.
pub fn golden_corpus() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = TWO_BIT
        .iter()
        .map(|&(name, t, description)| CorpusEntry {
            name,
            table: t.to_string(),
            description,
        })
        .collect();
    let three = |f: fn(bool, bool, bool) -> bool| {
        TruthTable::from_fn(3, |x| f(x & 4 != 0, x & 2 != 0, x & 1 != 0))
            .expect("n = 3")
            .to_string()
    };
    out.push(CorpusEntry {
        name: "deutsch",
        table: "0110".into(),
        description: "the Deutsch problem, x1 XOR x2",
    });
    out.push(CorpusEntry {
        name: "maj3",
        table: three(|a, b, c| (a as u8 + b as u8 + c as u8) >= 2),
        description: "majority of three",
    });
    out.push(CorpusEntry {
        name: "and_or3",
        table: three(|a, b, c| a && (b || c)),
        description: "x1 AND (x2 OR x3)",
    });
    out.push(CorpusEntry {
        name: "parity3",
        table: three(|a, b, c| a ^ b ^ c),
        description: "x1 XOR x2 XOR x3",
    });
    for (name, n) in [("dj2", 2), ("dj4", 4)] {
        out.push(CorpusEntry {
            name,
            table: deutsch_jozsa(n).expect("even n").0.to_string(),
            description: "Deutsch-Jozsa promise: 0 on constant, 1 on balanced strings",
        });
    }
    out
}

pub fn lookup(name: &str) -> Option<TruthTable> {
    golden_corpus()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.table.parse().expect("corpus tables parse"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_entries() {
        assert_eq!(lookup("and_or3").unwrap().to_string(), "00000111");
        assert_eq!(lookup("and2").unwrap().to_string(), "0001");
        assert_eq!(lookup("deutsch").unwrap().to_string(), "0110");
        assert_eq!(lookup("maj3").unwrap().to_string(), "00010111");
        assert_eq!(lookup("parity3").unwrap().to_string(), "01101001");
        assert_eq!(lookup("dj4").unwrap().to_string(), "0**1*11**11*1**0");
        assert!(lookup("nope").is_none());
    }

    #[test]
    fn two_bit_names_cover_every_function_once() {
        let mut tables: Vec<String> = golden_corpus()
            .into_iter()
            .filter(|e| e.table.len() == 4 && e.name != "deutsch" && e.name != "dj2")
            .map(|e| e.table)
            .collect();
        tables.sort();
        tables.dedup();
        assert_eq!(tables.len(), 16);
    }
}
