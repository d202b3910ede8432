//! Integer partitions, a×b-duality, Littlewood-Richardson coefficients and
//! standard-tableau (Specht) dimensions.
//!
//! Partitions are stored without trailing zeros; indexed access beyond the
//! length returns 0, matching the implicit zero-padding used in all the
//! combinatorial formulas.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers; the empty sequence is ∅.
///
/// Serializes as a JSON array of integers, e.g. `[3,1]`; ∅ as `[]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Partition {
    /// Builds a partition, validating that `parts` is weakly decreasing.
    /// Trailing zeros are stripped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition ∅.
    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// The a×b rectangle (b repeated a times).
    pub fn rectangle(a: usize, b: usize) -> Self {
        if b == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![b; a] }
        }
    }

    /// The staircase (j, j−1, …, 1).
    pub fn staircase(j: usize) -> Self {
        Partition {
            parts: (1..=j).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// λ_i with 1-based index; 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// The transpose (conjugate) partition: column lengths of the diagram.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Containment λ ⊆ μ, componentwise.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// True iff λ fits in the a×b rectangle.
    pub fn fits_in_rect(&self, a: usize, b: usize) -> bool {
        self.len() <= a && self.part(1) <= b
    }
}

/// A pair of partitions [λ•, λ∘] (black and white components).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub black: Partition,
    pub white: Partition,
}

impl Bipartition {
    pub fn new(black: Partition, white: Partition) -> Self {
        Bipartition { black, white }
    }

    pub fn size(&self) -> usize {
        self.black.size() + self.white.size()
    }
}

impl std::fmt::Display for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]", self.black, self.white)
    }
}

/// True iff λ and μ are a×b-dual: λ_i + μ_{a+1−i} = b for 1 ≤ i ≤ a and
/// λ_{a+1} = 0 = μ_{a+1}.
pub fn is_ab_dual(lambda: &Partition, mu: &Partition, a: usize, b: usize) -> bool {
    if lambda.part(a + 1) != 0 || mu.part(a + 1) != 0 {
        return false;
    }
    (1..=a).all(|i| lambda.part(i) + mu.part(a + 1 - i) == b)
}

/// The unique a×b-dual of λ. Errors if λ does not fit the a×b rectangle.
pub fn ab_dual(lambda: &Partition, a: usize, b: usize) -> Result<Partition> {
    if !lambda.fits_in_rect(a, b) {
        return Err(Error::InvalidParameter(format!(
            "{lambda} does not fit in the {a}x{b} rectangle"
        )));
    }
    let parts: Vec<usize> = (1..=a).map(|i| b - lambda.part(a + 1 - i)).collect();
    Partition::new(parts)
}

/// The rectangle-reachability condition: λ_i + μ_{a+1−i} ≥ b for 1 ≤ i ≤ a.
pub fn rect_reach_condition(lambda: &Partition, mu: &Partition, a: usize, b: usize) -> bool {
    (1..=a).all(|i| lambda.part(i) + mu.part(a + 1 - i) >= b)
}

/// The Littlewood-Richardson coefficient c^ν_{λμ}, computed by direct
/// enumeration of LR skew tableaux of shape ν/λ and content μ whose reverse
/// reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !lambda.contained_in(nu) {
        return 0;
    }
    if mu.is_empty() {
        return 1; // shape ν/λ with ν = λ: single empty tableau
    }
    // Cells in reverse-reading-word order: row by row, right to left.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 1..=nu.len() {
        let lo = lambda.part(r);
        let hi = nu.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let k = mu.len();
    // entry[(r,c)] lookup by dense grid
    let rows = nu.len();
    let width = nu.part(1);
    let mut grid = vec![0usize; rows * width]; // 0 = unfilled / not in skew shape
    let mut used = vec![0usize; k + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut [usize],
        used: &mut [usize],
        mu: &Partition,
        lambda: &Partition,
        nu: &Partition,
        width: usize,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let k = used.len() - 1;
        let mut count = 0;
        for v in 1..=k {
            if used[v] >= mu.part(v) {
                continue;
            }
            // lattice condition on the reverse reading word prefix
            if v > 1 && used[v] >= used[v - 1] {
                continue;
            }
            // row weakly increasing left to right: right neighbor already placed
            if c + 1 < nu.part(r) {
                let right = grid[(r - 1) * width + (c + 1)];
                if right != 0 && v > right {
                    continue;
                }
            }
            // column strictly increasing downwards: cell above, if in the skew shape
            if r > 1 && c < nu.part(r - 1) && c >= lambda.part(r - 1) {
                let above = grid[(r - 2) * width + c];
                if above == 0 || v <= above {
                    continue;
                }
            }
            grid[(r - 1) * width + c] = v;
            used[v] += 1;
            count += rec(idx + 1, cells, grid, used, mu, lambda, nu, width);
            used[v] -= 1;
            grid[(r - 1) * width + c] = 0;
        }
        count
    }
    // Cells above in the same column are filled before cells below only if the
    // reading order visits them earlier; row-by-row order guarantees that.
    rec(0, &cells, &mut grid, &mut used, mu, lambda, nu, width)
}

/// Number of standard Young tableaux of shape λ (the hook-length formula).
pub fn specht_dim(lambda: &Partition) -> u128 {
    let n = lambda.size() as u128;
    let transpose = lambda.transpose();
    let mut numerator: u128 = 1;
    let mut hooks: Vec<u128> = Vec::new();
    for r in 1..=lambda.len() {
        for c in 1..=lambda.part(r) {
            let hook = (lambda.part(r) - c) + (transpose.part(c) - r) + 1;
            hooks.push(hook as u128);
        }
    }
    let mut denominator: u128 = 1;
    for h in hooks {
        denominator = denominator.checked_mul(h).expect("hook product overflow");
    }
    for i in 1..=n {
        numerator = numerator.checked_mul(i).expect("factorial overflow");
    }
    numerator / denominator
}

/// All partitions of n, in deterministic (lexicographically decreasing) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of n that fit in the a×b rectangle.
pub fn partitions_of_in_rect(n: usize, a: usize, b: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.fits_in_rect(a, b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[4, 4]).transpose(), p(&[2, 2, 2, 2]));
    }

    #[test]
    fn transpose_involution() {
        for n in 0..=9 {
            for lam in partitions_of(n) {
                assert_eq!(lam.transpose().transpose(), lam);
                assert_eq!(lam.transpose().size(), lam.size());
            }
        }
    }

    #[test]
    fn dual_examples() {
        assert!(is_ab_dual(
            &Partition::empty(),
            &Partition::rectangle(3, 4),
            3,
            4
        ));
        assert!(is_ab_dual(&p(&[2]), &p(&[2]), 1, 4));
        // staircase transpose is (j,…,1)-vs-staircase j×(j+1)-dual
        for j in 1..=5 {
            let st = Partition::staircase(j);
            assert!(is_ab_dual(&st.transpose(), &st, j, j + 1));
        }
        assert_eq!(ab_dual(&Partition::empty(), 2, 3).unwrap(), p(&[3, 3]));
        assert_eq!(ab_dual(&p(&[2, 1]), 2, 3).unwrap(), p(&[2, 1]));
        assert_eq!(ab_dual(&p(&[4]), 2, 4).unwrap(), p(&[4]));
        assert!(ab_dual(&p(&[5]), 2, 4).is_err());
    }

    #[test]
    fn dual_symmetry_exhaustive() {
        for a in 0..=4 {
            for b in 0..=4 {
                for n in 0..=8 {
                    for lam in partitions_of(n) {
                        for m in 0..=8 {
                            for mu in partitions_of(m) {
                                assert_eq!(
                                    is_ab_dual(&lam, &mu, a, b),
                                    is_ab_dual(&mu, &lam, a, b)
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rect_reach_examples() {
        assert!(rect_reach_condition(
            &Partition::rectangle(2, 3),
            &Partition::empty(),
            2,
            3
        ));
        assert!(!rect_reach_condition(&p(&[1]), &p(&[1]), 1, 3));
    }

    #[test]
    fn rect_reach_transpose_equivalence() {
        // the condition must agree with its transposed form, exhaustively
        for a in 1..=5 {
            for b in 1..=5 {
                for n in 0..=6 {
                    for lam in partitions_of(n) {
                        for m in 0..=6 {
                            for mu in partitions_of(m) {
                                let direct = rect_reach_condition(&lam, &mu, a, b);
                                let transposed = rect_reach_condition(
                                    &lam.transpose(),
                                    &mu.transpose(),
                                    b,
                                    a,
                                );
                                assert_eq!(direct, transposed, "{lam} {mu} {a} {b}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_trivial_cases() {
        for n in 0..=6 {
            for nu in partitions_of(n) {
                assert_eq!(lr_coefficient(&Partition::empty(), &nu, &nu), 1);
                assert_eq!(lr_coefficient(&nu, &Partition::empty(), &nu), 1);
            }
        }
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    /// Independent oracle: expand s_λ·s_μ into monomials (as sums over
    /// semistandard tableaux) and peel off Schur polynomials greedily from the
    /// lexicographically largest exponent. Validates the tableau-based LR count.
    fn schur_monomials(lambda: &Partition, vars: usize) -> BTreeMap<Vec<usize>, i64> {
        // enumerate SSYT of shape λ with entries in 1..=vars
        let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        let rows = lambda.len();
        let width = lambda.part(1);
        let mut grid = vec![0usize; rows * width];
        fn rec(
            cells: &[(usize, usize)],
            idx: usize,
            grid: &mut [usize],
            width: usize,
            vars: usize,
            out: &mut BTreeMap<Vec<usize>, i64>,
        ) {
            if idx == cells.len() {
                let mut exp = vec![0usize; vars];
                for &v in grid.iter() {
                    if v > 0 {
                        exp[v - 1] += 1;
                    }
                }
                *out.entry(exp).or_insert(0) += 1;
                return;
            }
            let (r, c) = cells[idx];
            let min_row = if c > 1 { grid[(r - 1) * width + (c - 2)] } else { 1 };
            let min_col = if r > 1 { grid[(r - 2) * width + (c - 1)] + 1 } else { 1 };
            for v in min_row.max(min_col)..=vars {
                grid[(r - 1) * width + (c - 1)] = v;
                rec(cells, idx + 1, grid, width, vars, out);
                grid[(r - 1) * width + (c - 1)] = 0;
            }
        }
        let mut cells = Vec::new();
        for r in 1..=rows {
            for c in 1..=lambda.part(r) {
                cells.push((r, c));
            }
        }
        rec(&cells, 0, &mut grid, width, vars, &mut out);
        out
    }

    fn lr_via_schur_products(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
        let vars = lambda.size() + mu.size();
        let a = schur_monomials(lambda, vars);
        let b = schur_monomials(mu, vars);
        let mut product: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let sum: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *product.entry(sum).or_insert(0) += ca * cb;
            }
        }
        let mut coeffs = BTreeMap::new();
        // repeatedly peel the lexicographically largest monomial: its exponent
        // is a partition and its coefficient is the multiplicity of that Schur
        // polynomial in the remainder
        loop {
            let top = product
                .iter()
                .filter(|(_, &c)| c != 0)
                .max_by(|(e1, _), (e2, _)| e1.cmp(e2));
            let (exp, coef) = match top {
                Some((e, &c)) => (e.clone(), c),
                None => break,
            };
            let mut parts = exp.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            let nu = Partition::new(parts).expect("leading exponent is a partition");
            let s_nu = schur_monomials(&nu, vars);
            for (e, c) in &s_nu {
                *product.entry(e.clone()).or_insert(0) -= coef * c;
            }
            coeffs.insert(nu, coef);
        }
        coeffs
    }

    #[test]
    fn lr_matches_schur_product_oracle() {
        // moderate sizes; the oracle is exponential in the number of variables
        let cases = [
            (p(&[1]), p(&[1])),
            (p(&[2]), p(&[1, 1])),
            (p(&[2, 1]), p(&[2, 1])),
            (p(&[2, 1]), p(&[1, 1])),
            (p(&[3]), p(&[2, 1])),
            (p(&[2, 2]), p(&[2, 1])),
        ];
        for (lam, mu) in cases {
            let oracle = lr_via_schur_products(&lam, &mu);
            let total = lam.size() + mu.size();
            for nu in partitions_of(total) {
                let expected = *oracle.get(&nu).unwrap_or(&0);
                assert!(expected >= 0);
                assert_eq!(
                    lr_coefficient(&lam, &mu, &nu),
                    expected as u64,
                    "c^{nu}_{{{lam},{mu}}}"
                );
            }
        }
    }

    #[test]
    fn lr_symmetry() {
        for total in 0..=7 {
            for na in 0..=total {
                for lam in partitions_of(na) {
                    for mu in partitions_of(total - na) {
                        for nu in partitions_of(total) {
                            assert_eq!(
                                lr_coefficient(&lam, &mu, &nu),
                                lr_coefficient(&mu, &lam, &nu)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_dual_link() {
        // c^{(b^a)}_{λμ} = 1 iff λ,μ are a×b-dual, for |λ|+|μ| = ab ≤ 12
        for a in 1..=4 {
            for b in 1..=3 {
                if a * b > 12 {
                    continue;
                }
                let rect = Partition::rectangle(a, b);
                for na in 0..=a * b {
                    for lam in partitions_of(na) {
                        for mu in partitions_of(a * b - na) {
                            let c = lr_coefficient(&lam, &mu, &rect);
                            let dual = is_ab_dual(&lam, &mu, a, b);
                            assert_eq!(c, dual as u64, "{lam} {mu} {a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rect_reach_iff_some_lr_above_rectangle() {
        // λ_i+μ_{a+1−i} ≥ b  ⇔  some ν ⊇ (b^a) has c^ν_{λμ} > 0
        for a in 1..=3 {
            for b in 1..=3 {
                for na in 0..=5 {
                    for lam in partitions_of(na) {
                        for nb in 0..=(5 - na.min(5)) {
                            for mu in partitions_of(nb) {
                                if lam.size() + mu.size() < a * b {
                                    continue;
                                }
                                let rect = Partition::rectangle(a, b);
                                let reach = partitions_of(lam.size() + mu.size())
                                    .into_iter()
                                    .any(|nu| {
                                        rect.contained_in(&nu)
                                            && lr_coefficient(&lam, &mu, &nu) > 0
                                    });
                                assert_eq!(
                                    rect_reach_condition(&lam, &mu, a, b),
                                    reach,
                                    "{lam} {mu} {a} {b}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    /// Direct enumeration of standard Young tableaux, for validating the
    /// hook-length formula.
    fn count_standard_tableaux(lambda: &Partition) -> u128 {
        fn rec(rows: &mut Vec<usize>, lambda: &Partition, placed: usize, n: usize) -> u128 {
            if placed == n {
                return 1;
            }
            let mut total = 0;
            for r in 0..lambda.len() {
                let filled = rows[r];
                if filled < lambda.part(r + 1) && (r == 0 || rows[r - 1] > filled) {
                    rows[r] += 1;
                    total += rec(rows, lambda, placed + 1, n);
                    rows[r] -= 1;
                }
            }
            total
        }
        let mut rows = vec![0usize; lambda.len()];
        rec(&mut rows, lambda, 0, lambda.size())
    }

    #[test]
    fn specht_dim_examples() {
        assert_eq!(specht_dim(&p(&[5])), 1);
        assert_eq!(specht_dim(&p(&[2, 1])), 2);
        assert_eq!(specht_dim(&p(&[3, 1])), 3);
        assert_eq!(specht_dim(&Partition::empty()), 1);
    }

    #[test]
    fn specht_dim_matches_tableau_enumeration() {
        for n in 0..=7 {
            for lam in partitions_of(n) {
                assert_eq!(specht_dim(&lam), count_standard_tableaux(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn specht_dim_squares_sum_to_factorial() {
        for n in 1..=8u128 {
            let total: u128 = partitions_of(n as usize)
                .iter()
                .map(|lam| specht_dim(lam).pow(2))
                .sum();
            let fact: u128 = (1..=n).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn serde_roundtrip() {
        let lam = p(&[3, 1]);
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, "[3,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, lam);
        let empty: Partition = serde_json::from_str("[]").unwrap();
        assert_eq!(empty, Partition::empty());
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
