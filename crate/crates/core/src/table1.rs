//! Reference characteristic polynomials for the extremal unbalanced bicyclic
//! graphs and the competitors eliminated while ranking them.
//!
//! Each row is `x^(n - x_deficit)` times a product of factors whose
//! coefficients are affine in `n`. Coefficient pairs `[a, b]` mean `a·n + b`,
//! listed constant term first. `expanded` is the product of the factors,
//! expanded independently and stored for cross-checking.

use num_bigint::BigInt;

use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Row {
    pub label: &'static str,
    pub x_deficit: usize,
    pub factors: &'static [&'static [[i64; 2]]],
    pub expanded: &'static [[i64; 2]],
}

fn eval_affine(coeffs: &[[i64; 2]], n: i64) -> Polynomial {
    Polynomial::new(coeffs.iter().map(|[a, b]| BigInt::from(a * n + b)).collect())
}

impl Table1Row {
    /// Smallest order for which the row is a polynomial.
    pub fn min_order(&self) -> usize {
        self.x_deficit
    }

    /// `Φ` at order `n`, multiplying the factored form.
    pub fn factored_at(&self, n: usize) -> Polynomial {
        assert!(n >= self.x_deficit, "row {} needs n >= {}", self.label, self.x_deficit);
        let prod = self
            .factors
            .iter()
            .fold(Polynomial::one(), |acc, f| &acc * &eval_affine(f, n as i64));
        prod.shift(n - self.x_deficit)
    }

    /// `Φ` at order `n` from the stored expansion.
    pub fn expanded_at(&self, n: usize) -> Polynomial {
        assert!(n >= self.x_deficit, "row {} needs n >= {}", self.label, self.x_deficit);
        eval_affine(self.expanded, n as i64).shift(n - self.x_deficit)
    }

    /// Whether the row belongs to one of the five extremal families.
    pub fn family(&self) -> Option<usize> {
        match self.label {
            "G1" => Some(1),
            "G2" => Some(2),
            "G3" => Some(3),
            "G4" => Some(4),
            "G5" => Some(5),
            _ => None,
        }
    }
}

pub fn row(label: &str) -> Option<&'static Table1Row> {
    TABLE1.iter().find(|r| r.label == label)
}

pub static TABLE1: &[Table1Row] = &[
    Table1Row {
        label: "G1",
        x_deficit: 6,
        factors: &[&[[0, -1], [0, 0], [0, 1]], &[[1, -5], [0, 0], [-1, 0], [0, 0], [0, 1]]],
        expanded: &[[-1, 5], [0, 0], [2, -5], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G2",
        x_deficit: 4,
        factors: &[&[[2, -4], [0, 0], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[2, -4], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G3",
        x_deficit: 4,
        factors: &[&[[2, -8], [0, 4], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[2, -8], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G4",
        x_deficit: 6,
        factors: &[&[[0, 1], [0, 1]], &[[0, -1], [0, 1]], &[[0, -1], [0, 1]], &[[-1, 5], [-1, 1], [0, 1], [0, 1]]],
        expanded: &[[-1, 5], [0, -4], [2, -5], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G5",
        x_deficit: 5,
        factors: &[&[[0, 2], [0, 1]], &[[0, -1], [0, 1]], &[[1, -4], [-1, 2], [0, -1], [0, 1]]],
        expanded: &[[-2, 8], [3, -8], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G6",
        x_deficit: 6,
        factors: &[&[[0, -1], [0, 1]], &[[1, -5], [3, -15], [-1, 0], [-1, 0], [0, 1], [0, 1]]],
        expanded: &[[-1, 5], [-2, 10], [4, -15], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G7",
        x_deficit: 6,
        factors: &[&[[0, 1], [0, 1]], &[[-1, 5], [3, -15], [1, 0], [-1, 0], [0, -1], [0, 1]]],
        expanded: &[[-1, 5], [2, -10], [4, -15], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G8",
        x_deficit: 6,
        factors: &[&[[0, -1], [0, 1]], &[[1, -5], [3, -11], [-1, 4], [-1, 0], [0, 1], [0, 1]]],
        expanded: &[[-1, 5], [-2, 6], [4, -15], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G9",
        x_deficit: 5,
        factors: &[&[[0, -1], [0, 1]], &[[2, -8], [-1, 4], [-1, 0], [0, 1], [0, 1]]],
        expanded: &[[-2, 8], [3, -12], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G10",
        x_deficit: 5,
        factors: &[&[[0, -2], [0, 1]], &[[0, 1], [0, 1]], &[[-1, 4], [-1, 2], [0, 1], [0, 1]]],
        expanded: &[[2, -8], [3, -8], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G11",
        x_deficit: 7,
        factors: &[&[[0, -1], [0, 1]], &[[0, -1], [0, 1]], &[[0, 1], [0, 1]], &[[2, -12], [-1, 1], [-1, 1], [0, 1], [0, 1]]],
        expanded: &[[2, -12], [-3, 13], [-2, 12], [4, -13], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G12",
        x_deficit: 7,
        factors: &[&[[0, -1], [0, 1]], &[[0, 1], [0, 1]], &[[0, 1], [0, 1]], &[[2, -12], [1, -1], [-1, 1], [0, -1], [0, 1]]],
        expanded: &[[-2, 12], [-3, 13], [2, -12], [4, -13], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G13",
        x_deficit: 7,
        factors: &[&[[0, -1], [0, 1]], &[[0, -1], [0, 1]], &[[2, -12], [1, -3], [-2, 6], [-1, 2], [0, 2], [0, 1]]],
        expanded: &[[2, -12], [-3, 21], [-2, 0], [4, -13], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G1^1",
        x_deficit: 6,
        factors: &[&[[0, -1], [0, 1]], &[[2, -11], [2, -9], [-1, 0], [-1, 0], [0, 1], [0, 1]]],
        expanded: &[[-2, 11], [0, -2], [3, -9], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G1^2",
        x_deficit: 6,
        factors: &[&[[0, -1], [0, 1]], &[[2, -11], [4, -23], [-1, 0], [-1, 0], [0, 1], [0, 1]]],
        expanded: &[[-2, 11], [-2, 12], [5, -23], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G1^3",
        x_deficit: 8,
        factors: &[&[[0, -1], [0, 1]], &[[0, -1], [0, 1]], &[[0, 1], [0, 1]], &[[0, 1], [0, 1]], &[[1, -7], [0, 0], [-1, 1], [0, 0], [0, 1]]],
        expanded: &[[1, -7], [0, 0], [-3, 15], [0, 0], [3, -8], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G1^4",
        x_deficit: 6,
        factors: &[&[[0, 1], [0, 1]], &[[-2, 11], [2, -9], [1, 0], [-1, 0], [0, -1], [0, 1]]],
        expanded: &[[-2, 11], [0, 2], [3, -9], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G1^5",
        x_deficit: 6,
        factors: &[&[[0, 1], [0, 1]], &[[-2, 11], [4, -23], [1, 0], [-1, 0], [0, -1], [0, 1]]],
        expanded: &[[-2, 11], [2, -12], [5, -23], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G1^6",
        x_deficit: 6,
        factors: &[&[[0, 1], [0, 1]], &[[0, -1], [0, 1]], &[[5, -29], [0, 0], [-1, 0], [0, 0], [0, 1]]],
        expanded: &[[-5, 29], [0, 0], [6, -29], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G2^1",
        x_deficit: 6,
        factors: &[&[[-2, 8], [0, 0], [3, -7], [0, 0], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-2, 8], [0, 0], [3, -7], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G2^2",
        x_deficit: 6,
        factors: &[&[[-1, 5], [0, 2], [3, -8], [0, 0], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-1, 5], [0, 2], [3, -8], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G2^3",
        x_deficit: 6,
        factors: &[&[[-1, 5], [2, -10], [4, -14], [0, 0], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-1, 5], [2, -10], [4, -14], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G2^4",
        x_deficit: 6,
        factors: &[&[[-1, 5], [0, -2], [3, -8], [0, 0], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-1, 5], [0, -2], [3, -8], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G2^5",
        x_deficit: 6,
        factors: &[&[[-1, 5], [-2, 10], [4, -14], [0, 0], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-1, 5], [-2, 10], [4, -14], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G2^6",
        x_deficit: 4,
        factors: &[&[[3, -9], [0, 0], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[3, -9], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G2^7",
        x_deficit: 6,
        factors: &[&[[-4, 20], [0, 0], [5, -19], [0, 0], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-4, 20], [0, 0], [5, -19], [0, 0], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G3^1",
        x_deficit: 6,
        factors: &[&[[-2, 12], [0, -4], [3, -11], [0, 4], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-2, 12], [0, -4], [3, -11], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G3^2",
        x_deficit: 6,
        factors: &[&[[-1, 6], [0, -2], [3, -12], [0, 4], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-1, 6], [0, -2], [3, -12], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G3^3",
        x_deficit: 6,
        factors: &[&[[-1, 5], [-2, 10], [4, -18], [0, 4], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-1, 5], [-2, 10], [4, -18], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G3^4",
        x_deficit: 4,
        factors: &[&[[3, -13], [0, 4], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[3, -13], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G3^5",
        x_deficit: 5,
        factors: &[&[[-4, 20], [5, -23], [0, 4], [-1, -1], [0, 0], [0, 1]]],
        expanded: &[[-4, 20], [5, -23], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G4^1",
        x_deficit: 6,
        factors: &[&[[0, -1], [0, 1]], &[[2, -11], [2, -5], [-1, 4], [-1, 0], [0, 1], [0, 1]]],
        expanded: &[[-2, 11], [0, -6], [3, -9], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G4^2",
        x_deficit: 6,
        factors: &[&[[0, -1], [0, 1]], &[[2, -11], [4, -19], [-1, 4], [-1, 0], [0, 1], [0, 1]]],
        expanded: &[[-2, 11], [-2, 8], [5, -23], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G4^3",
        x_deficit: 8,
        factors: &[&[[0, -1], [0, 1]], &[[0, -1], [0, 1]], &[[0, 1], [0, 1]], &[[0, 1], [0, 1]], &[[1, -7], [0, 4], [-1, 1], [0, 0], [0, 1]]],
        expanded: &[[1, -7], [0, 4], [-3, 15], [0, -8], [3, -8], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
    Table1Row {
        label: "G4^4",
        x_deficit: 7,
        factors: &[&[[0, -1], [0, 1]], &[[0, -1], [0, 1]], &[[0, 1], [0, 1]], &[[4, -24], [-1, 5], [-1, 1], [0, 1], [0, 1]]],
        expanded: &[[4, -24], [-5, 29], [-4, 20], [6, -29], [0, 4], [-1, -1], [0, 0], [0, 1]],
    },
];
