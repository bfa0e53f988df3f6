//! Semisimple maximal subalgebras of maximal rank in the simple Lie
//! algebras, as a data table with a row-instance generator.

use std::fmt::Write as _;

use crate::rootsys::{Family, SemisimpleAlgebra, SimpleType};

/// One row of the table: an ambient family and the shape of its maximal
/// equal-rank semisimple subalgebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub ambient: &'static str,
    pub constraint: &'static str,
    pub subalgebra: &'static str,
    pub range: &'static str,
}

pub const MAXIMAL_RANK_TABLE: &[TableRow] = &[
    TableRow {
        ambient: "so(2l+1)",
        constraint: "l >= 2",
        subalgebra: "so(2k) + so(2(l-k)+1)",
        range: "2 <= k <= l",
    },
    TableRow {
        ambient: "sp(2l)",
        constraint: "l >= 3",
        subalgebra: "sp(2k) + sp(2(l-k))",
        range: "1 <= k <= l/2",
    },
    TableRow {
        ambient: "so(2l)",
        constraint: "l >= 4",
        subalgebra: "so(2k) + so(2(l-k))",
        range: "2 <= k <= (l+1)/2",
    },
    TableRow { ambient: "E6", constraint: "", subalgebra: "sl(2) + sl(6)", range: "" },
    TableRow { ambient: "E6", constraint: "", subalgebra: "sl(3) + sl(3) + sl(3)", range: "" },
    TableRow { ambient: "E7", constraint: "", subalgebra: "sl(2) + so(12)", range: "" },
    TableRow { ambient: "E7", constraint: "", subalgebra: "sl(3) + sl(6)", range: "" },
    TableRow { ambient: "E7", constraint: "", subalgebra: "sl(8)", range: "" },
    TableRow { ambient: "E8", constraint: "", subalgebra: "sl(2) + E7", range: "" },
    TableRow { ambient: "E8", constraint: "", subalgebra: "sl(3) + E6", range: "" },
    TableRow { ambient: "E8", constraint: "", subalgebra: "sl(5) + sl(5)", range: "" },
    TableRow { ambient: "E8", constraint: "", subalgebra: "so(16)", range: "" },
    TableRow { ambient: "E8", constraint: "", subalgebra: "sl(9)", range: "" },
    TableRow { ambient: "F4", constraint: "", subalgebra: "sl(2) + sp(6)", range: "" },
    TableRow { ambient: "F4", constraint: "", subalgebra: "sl(3) + sl(3)", range: "" },
    TableRow { ambient: "F4", constraint: "", subalgebra: "so(9)", range: "" },
    TableRow { ambient: "G2", constraint: "", subalgebra: "sl(3)", range: "" },
    TableRow { ambient: "G2", constraint: "", subalgebra: "so(4)", range: "" },
];

/// A concrete instance of a table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableInstance {
    pub ambient: SimpleType,
    pub sub: SemisimpleAlgebra,
    pub row: usize,
}

impl TableInstance {
    pub fn citation(&self) -> String {
        let r = &MAXIMAL_RANK_TABLE[self.row];
        format!("{} ⊃ {}", r.ambient, r.subalgebra)
    }
}

fn st(f: Family, n: usize) -> SimpleType {
    SimpleType::new(f, n).expect("table types are valid")
}

/// Simple factors of `so(2k)`, `k >= 2`.
pub fn so_even(k: usize) -> Vec<SimpleType> {
    match k {
        0 | 1 => vec![],
        2 => vec![SimpleType::a(1), SimpleType::a(1)],
        _ => vec![st(Family::D, k)],
    }
}

/// Simple factors of `so(2m+1)`.
pub fn so_odd(m: usize) -> Vec<SimpleType> {
    match m {
        0 => vec![],
        _ => vec![st(Family::B, m)],
    }
}

/// Simple factors of `sp(2k)`.
pub fn sp(k: usize) -> Vec<SimpleType> {
    match k {
        0 => vec![],
        _ => vec![st(Family::C, k)],
    }
}

fn alg(parts: Vec<Vec<SimpleType>>) -> SemisimpleAlgebra {
    SemisimpleAlgebra::new(parts.into_iter().flatten().collect()).expect("nonempty")
}

/// Table rows expanded for one ambient simple type (empty for type A).
pub fn instances_for(t: SimpleType) -> Vec<TableInstance> {
    let l = t.rank();
    let mut out: Vec<TableInstance> = Vec::new();
    let mut push = |row: usize, sub: SemisimpleAlgebra| {
        if !out.iter().any(|i| i.sub == sub) {
            out.push(TableInstance { ambient: t, sub, row });
        }
    };
    match (t.family(), l) {
        (Family::A, _) => {}
        (Family::B, _) => {
            for k in 2..=l {
                push(0, alg(vec![so_even(k), so_odd(l - k)]));
            }
        }
        (Family::C, _) => {
            for k in 1..=l / 2 {
                push(1, alg(vec![sp(k), sp(l - k)]));
            }
        }
        (Family::D, _) => {
            for k in 2..=(l + 1) / 2 {
                push(2, alg(vec![so_even(k), so_even(l - k)]));
            }
        }
        (Family::E, 6) => {
            push(3, alg(vec![vec![SimpleType::a(1), SimpleType::a(5)]]));
            push(4, alg(vec![vec![SimpleType::a(2); 3]]));
        }
        (Family::E, 7) => {
            push(5, alg(vec![vec![SimpleType::a(1), st(Family::D, 6)]]));
            push(6, alg(vec![vec![SimpleType::a(2), SimpleType::a(5)]]));
            push(7, alg(vec![vec![SimpleType::a(7)]]));
        }
        (Family::E, _) => {
            push(8, alg(vec![vec![SimpleType::a(1), st(Family::E, 7)]]));
            push(9, alg(vec![vec![SimpleType::a(2), st(Family::E, 6)]]));
            push(10, alg(vec![vec![SimpleType::a(4), SimpleType::a(4)]]));
            push(11, alg(vec![vec![st(Family::D, 8)]]));
            push(12, alg(vec![vec![SimpleType::a(8)]]));
        }
        (Family::F, _) => {
            push(13, alg(vec![vec![SimpleType::a(1), st(Family::C, 3)]]));
            push(14, alg(vec![vec![SimpleType::a(2), SimpleType::a(2)]]));
            push(15, alg(vec![vec![st(Family::B, 4)]]));
        }
        (Family::G, _) => {
            push(16, alg(vec![vec![SimpleType::a(2)]]));
            push(17, alg(vec![vec![SimpleType::a(1), SimpleType::a(1)]]));
        }
    }
    out
}

/// Every instance whose ambient has rank at most `max_rank`.
pub fn instances(max_rank: usize) -> Vec<TableInstance> {
    SimpleType::all_up_to_rank(max_rank)
        .into_iter()
        .flat_map(instances_for)
        .collect()
}

/// Plain-text rendering of the table.
pub fn table_text() -> String {
    let mut s = String::from("ambient\tconstraint\tsubalgebra\trange\n");
    for r in MAXIMAL_RANK_TABLE {
        let _ = writeln!(s, "{}\t{}\t{}\t{}", r.ambient, r.constraint, r.subalgebra, r.range);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e8_rows() {
        let e8 = st(Family::E, 8);
        let subs: Vec<String> = instances_for(e8).iter().map(|i| i.sub.to_string()).collect();
        assert_eq!(subs, vec!["A1xE7", "A2xE6", "A4xA4", "D8", "A8"]);
    }

    #[test]
    fn low_rank_identifications() {
        let b2 = st(Family::B, 2);
        let subs: Vec<String> = instances_for(b2).iter().map(|i| i.sub.to_string()).collect();
        assert_eq!(subs, vec!["A1xA1"]);
        let b3 = st(Family::B, 3);
        let subs: Vec<String> = instances_for(b3).iter().map(|i| i.sub.to_string()).collect();
        assert_eq!(subs, vec!["A1xA1xA1", "A3"]);
        assert!(instances_for(SimpleType::a(5)).is_empty());
    }

    #[test]
    fn ranks_match() {
        for i in instances(10) {
            assert_eq!(i.ambient.rank(), i.sub.rank(), "{}", i.citation());
        }
    }

    #[test]
    fn text_export_has_every_row() {
        assert_eq!(table_text().lines().count(), MAXIMAL_RANK_TABLE.len() + 1);
    }
}
