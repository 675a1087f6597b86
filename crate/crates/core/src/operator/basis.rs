use std::fmt;

/// Row/column semantics of an operator matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// |n⟩
    Fock(usize),
    /// |n₁, n₂⟩
    TwoMode(usize, usize),
    /// |j, m~⟩ stored as (2j, 2m).
    Spin { two_j: u32, two_m: i32 },
}

impl BasisLabel {
    pub fn spin(two_j: u32, two_m: i32) -> Self {
        BasisLabel::Spin { two_j, two_m }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            BasisLabel::Fock(_) | BasisLabel::TwoMode(_, _) => true,
            BasisLabel::Spin { two_j, two_m } => {
                two_m.unsigned_abs() <= two_j && (two_j as i64 - two_m as i64) % 2 == 0
            }
        }
    }
}

/// Fock basis |0⟩ … |dim-1⟩.
pub fn fock_basis(dim: usize) -> Vec<BasisLabel> {
    (0..dim).map(BasisLabel::Fock).collect()
}

/// Spin basis ordered m = j, j-1, …, -j.
pub fn spin_basis(two_j: u32) -> Vec<BasisLabel> {
    (0..=two_j)
        .map(|r| BasisLabel::spin(two_j, two_j as i32 - 2 * r as i32))
        .collect()
}

fn half(n: i64) -> String {
    if n % 2 == 0 {
        (n / 2).to_string()
    } else {
        format!("{n}/2")
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisLabel::Fock(n) => write!(f, "|{n}⟩"),
            BasisLabel::TwoMode(a, b) => write!(f, "|{a},{b}⟩"),
            BasisLabel::Spin { two_j, two_m } => {
                write!(f, "|j={},m={}⟩", half(two_j as i64), half(two_m as i64))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_labels() {
        assert!(BasisLabel::spin(3, -1).is_valid());
        assert!(!BasisLabel::spin(3, 0).is_valid());
        assert!(!BasisLabel::spin(2, 4).is_valid());
        assert_eq!(spin_basis(2)[0], BasisLabel::spin(2, 2));
        assert_eq!(BasisLabel::spin(3, -1).to_string(), "|j=3/2,m=-1/2⟩");
    }
}
