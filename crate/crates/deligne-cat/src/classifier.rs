//! Combinatorial classification of thick tensor ideals.
//!
//! For each family of interpolating categories the chain of tensor ideals
//! J_0 ⊋ J_1 ⊋ J_2 ⊋ ⋯ is controlled by a pair of integer parameters
//! (m_j, n_j) per index j, a distinguished rectangle label ν^(j) generating
//! J_j, a hook-style membership predicate, and a duality condition describing
//! the first nonzero Hom spaces inside J_j. This module implements those
//! closed forms exactly; the matrix oracle in [`crate::oracle`] provides the
//! independent numerical cross-check at small rank.

use serde::{Deserialize, Serialize};

use crate::oracle::{bell, RepSpec};
use crate::partition::{
    ab_dual, is_ab_dual, partitions_of, partitions_of_in_rect, specht_dim, Bipartition, Partition,
};
use crate::{Error, Result};

/// The family whose ideal lattice is being classified.
///
/// `O`/`GL` interpolate orthosymplectic resp. general linear groups at an
/// integer parameter δ; `P` is the periplectic case (δ is forced to 0); `S`
/// interpolates symmetric groups at an integer t (its unique proper tensor
/// ideal is the negligible one and carries no label predicate here); `SL2`
/// is the characteristic-p tilting variant, whose labels are highest weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "flavor")]
pub enum Family {
    O { delta: i64 },
    GL { delta: i64 },
    P,
    S { t: u64 },
    SL2 { p: u64 },
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::O { delta } => write!(f, "O(δ={delta})"),
            Family::GL { delta } => write!(f, "GL(δ={delta})"),
            Family::P => write!(f, "P"),
            Family::S { t } => write!(f, "S(t={t})"),
            Family::SL2 { p } => write!(f, "SL2(p={p})"),
        }
    }
}

/// The parameter pair (m_j, n_j) and the rank r_j = (m_j+1)(n_j+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamTriple {
    pub m: usize,
    pub n: usize,
    pub r: usize,
}

/// Label of an indecomposable object.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectLabel {
    /// A single partition (O, P, S families).
    Single(Partition),
    /// A pair of partitions (GL family).
    Pair(Bipartition),
    /// A dominant weight for the rank-one tilting family.
    Weight(u64),
}

impl ObjectLabel {
    pub fn size(&self) -> usize {
        match self {
            ObjectLabel::Single(l) => l.size(),
            ObjectLabel::Pair(b) => b.size(),
            ObjectLabel::Weight(m) => *m as usize,
        }
    }

    pub fn as_single(&self) -> Result<&Partition> {
        match self {
            ObjectLabel::Single(l) => Ok(l),
            _ => Err(Error::InvalidParameter(
                "expected a single-partition label".into(),
            )),
        }
    }

    pub fn as_pair(&self) -> Result<&Bipartition> {
        match self {
            ObjectLabel::Pair(b) => Ok(b),
            _ => Err(Error::InvalidParameter(
                "expected a bipartition label".into(),
            )),
        }
    }
}

impl std::fmt::Display for ObjectLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ObjectLabel::Single(l) => write!(f, "{l}"),
            ObjectLabel::Pair(b) => write!(f, "{b}"),
            ObjectLabel::Weight(m) => write!(f, "T({m})"),
        }
    }
}

/// The parameters (m_j, n_j, r_j) attached to the j-th ideal, j ≥ 1.
///
/// Orthosymplectic case: m_j is δ+2j−2 for δ > 0, 2j−2 for δ a nonpositive
/// even integer, and 2j−1 for δ a negative odd integer; n_j = (m_j − δ)/2.
/// General linear case: m_j is δ+j−1 for δ ≥ 0 and j−1 for δ < 0;
/// n_j = m_j − δ. In every branch n_j is a nonnegative integer.
pub fn params(family: Family, j: usize) -> Result<ParamTriple> {
    if j == 0 {
        return Err(Error::InvalidParameter(
            "params requires j ≥ 1 (j = 0 is the whole category)".into(),
        ));
    }
    let (m, n): (i64, i64) = match family {
        Family::O { delta } => {
            let m = if delta > 0 {
                delta + 2 * j as i64 - 2
            } else if delta % 2 == 0 {
                2 * j as i64 - 2
            } else {
                2 * j as i64 - 1
            };
            (m, (m - delta) / 2)
        }
        Family::GL { delta } => {
            let m = if delta >= 0 {
                delta + j as i64 - 1
            } else {
                j as i64 - 1
            };
            (m, m - delta)
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "params is defined for the O and GL families, not {family}"
            )))
        }
    };
    debug_assert!(m >= 0 && n >= 0);
    let (m, n) = (m as usize, n as usize);
    Ok(ParamTriple {
        m,
        n,
        r: (m + 1) * (n + 1),
    })
}

/// The label ν^(j) of the object generating the j-th ideal.
///
/// ν^(0) = ∅ in all families; for j ≥ 1 it is the rectangle
/// ((2n_j+2)^{m_j+1}) in the O family, the pair of ((n_j+1)^{m_j+1})
/// rectangles in the GL family, and ((j+1)^j) in the periplectic family.
pub fn nu(family: Family, j: usize) -> Result<ObjectLabel> {
    if j == 0 {
        return Ok(match family {
            Family::GL { .. } => {
                ObjectLabel::Pair(Bipartition::new(Partition::empty(), Partition::empty()))
            }
            Family::O { .. } | Family::P => ObjectLabel::Single(Partition::empty()),
            _ => {
                return Err(Error::Unsupported(format!(
                    "nu is defined for the O, GL and P families, not {family}"
                )))
            }
        });
    }
    match family {
        Family::O { .. } => {
            let p = params(family, j)?;
            Ok(ObjectLabel::Single(Partition::rectangle(
                p.m + 1,
                2 * p.n + 2,
            )))
        }
        Family::GL { .. } => {
            let p = params(family, j)?;
            let rect = Partition::rectangle(p.m + 1, p.n + 1);
            Ok(ObjectLabel::Pair(Bipartition::new(rect.clone(), rect)))
        }
        Family::P => Ok(ObjectLabel::Single(Partition::rectangle(j, j + 1))),
        _ => Err(Error::Unsupported(format!(
            "nu is defined for the O, GL and P families, not {family}"
        ))),
    }
}

/// dim Hom(1, R(λ)): 1 if λ equals some ν^(j), 0 otherwise.
pub fn hom_unit_dim(family: Family, label: &ObjectLabel) -> Result<u8> {
    match family {
        Family::O { .. } | Family::GL { .. } | Family::P => {}
        _ => {
            return Err(Error::Unsupported(format!(
                "hom_unit_dim is defined for the O, GL and P families, not {family}"
            )))
        }
    }
    // |ν^(j)| is strictly increasing in j, so the scan terminates.
    let mut j = 0;
    loop {
        let v = nu(family, j)?;
        if v == *label {
            return Ok(1);
        }
        if v.size() > label.size() {
            return Ok(0);
        }
        j += 1;
    }
}

/// Membership of R(label) in the j-th tensor ideal.
///
/// j = 0 is the whole category. For j ≥ 1 the predicates are:
/// O: λ^t_i + λ^t_{2n_j+3−i} > m_j for all 1 ≤ i ≤ n_j+1;
/// GL: λ•_l + λ∘_{m_j−l+2} > n_j for all 1 ≤ l ≤ m_j+1;
/// P: λ_i ≥ j+1−i for all 1 ≤ i ≤ j;
/// SL2(p): T(m) lies in the k-th ideal iff m ≥ p^k − 1.
///
/// The S family is rejected: its unique proper ideal is the negligible one,
/// detected through traces and the oracle rather than a label predicate.
pub fn in_ideal(family: Family, j: usize, label: &ObjectLabel) -> Result<bool> {
    if j == 0 {
        return Ok(true);
    }
    match family {
        Family::O { .. } => {
            let p = params(family, j)?;
            let lt = label.as_single()?.transpose();
            Ok((1..=p.n + 1).all(|i| lt.part(i) + lt.part(2 * p.n + 3 - i) > p.m))
        }
        Family::GL { .. } => {
            let p = params(family, j)?;
            let pair = label.as_pair()?;
            Ok((1..=p.m + 1).all(|l| pair.black.part(l) + pair.white.part(p.m + 2 - l) > p.n))
        }
        Family::P => {
            let lambda = label.as_single()?;
            Ok((1..=j).all(|i| lambda.part(i) >= j + 1 - i))
        }
        Family::SL2 { p } => {
            let m = match label {
                ObjectLabel::Weight(m) => *m,
                _ => {
                    return Err(Error::InvalidParameter(
                        "SL2 labels are nonnegative integer weights".into(),
                    ))
                }
            };
            let threshold = p
                .checked_pow(j as u32)
                .ok_or_else(|| Error::BoundExceeded(format!("p^{j} overflows")))?
                - 1;
            Ok(m >= threshold)
        }
        Family::S { .. } => Err(Error::Unsupported(
            "the S family has no label predicate for ideal membership; \
             use negligibility or the oracle"
                .into(),
        )),
    }
}

/// The generator set Λ_j: labels at the boundary of the j-th ideal.
///
/// O: all λ ⊢ r_j that are (m_j+1)×(2n_j+2)-self-dual; GL: all pairs
/// [λ•, λ∘] with λ• and λ∘ (m_j+1)×(n_j+1)-dual; P: the staircase
/// singleton {(j, j−1, …, 1)}.
pub fn lambda_set(family: Family, j: usize) -> Result<Vec<ObjectLabel>> {
    if j == 0 {
        return Err(Error::InvalidParameter("lambda_set requires j ≥ 1".into()));
    }
    match family {
        Family::O { .. } => {
            let p = params(family, j)?;
            let (a, b) = (p.m + 1, 2 * p.n + 2);
            Ok(partitions_of_in_rect(p.r, a, b)
                .into_iter()
                .filter(|l| is_ab_dual(l, l, a, b))
                .map(ObjectLabel::Single)
                .collect())
        }
        Family::GL { .. } => {
            let p = params(family, j)?;
            let (a, b) = (p.m + 1, p.n + 1);
            let mut out = Vec::new();
            for s in 0..=p.r {
                for black in partitions_of_in_rect(s, a, b) {
                    let white = ab_dual(&black, a, b)?;
                    out.push(ObjectLabel::Pair(Bipartition::new(black, white)));
                }
            }
            out.sort();
            Ok(out)
        }
        Family::P => Ok(vec![ObjectLabel::Single(Partition::staircase(j))]),
        _ => Err(Error::Unsupported(format!(
            "lambda_set is defined for the O, GL and P families, not {family}"
        ))),
    }
}

/// Predicted dimension of Hom inside the j-th ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HomPrediction {
    Zero,
    One,
    Unknown,
}

impl std::fmt::Display for HomPrediction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomPrediction::Zero => write!(f, "0"),
            HomPrediction::One => write!(f, "1"),
            HomPrediction::Unknown => write!(f, "unknown"),
        }
    }
}

/// Predicted dim J_j(R(λ), R(μ)): zero below the size threshold, one at the
/// threshold exactly when the duality condition holds, and unknown above it
/// (no closed form is available there).
///
/// Thresholds and dualities: O: |λ|+|μ| = 2r_j with λ, μ
/// (m_j+1)×(2n_j+2)-dual; GL: |λ•|+|μ∘| = |μ•|+|λ∘| = r_j with λ•/μ∘ and
/// μ•/λ∘ each (m_j+1)×(n_j+1)-dual; P: |λ|+|μ| = j(j+1) with λ^t and μ
/// j×(j+1)-dual (note the asymmetry: the transpose enters one side only).
pub fn predicted_hom_j(
    family: Family,
    j: usize,
    lambda: &ObjectLabel,
    mu: &ObjectLabel,
) -> Result<HomPrediction> {
    if j == 0 {
        return Err(Error::InvalidParameter(
            "predicted_hom_j requires j ≥ 1".into(),
        ));
    }
    match family {
        Family::O { .. } => {
            let p = params(family, j)?;
            let (l, m) = (lambda.as_single()?, mu.as_single()?);
            let total = l.size() + m.size();
            Ok(if total < 2 * p.r {
                HomPrediction::Zero
            } else if total == 2 * p.r {
                if is_ab_dual(l, m, p.m + 1, 2 * p.n + 2) {
                    HomPrediction::One
                } else {
                    HomPrediction::Zero
                }
            } else {
                HomPrediction::Unknown
            })
        }
        Family::GL { .. } => {
            let p = params(family, j)?;
            let (l, m) = (lambda.as_pair()?, mu.as_pair()?);
            let s1 = l.black.size() + m.white.size();
            let s2 = m.black.size() + l.white.size();
            Ok(if s1 < p.r || s2 < p.r {
                HomPrediction::Zero
            } else if s1 == p.r && s2 == p.r {
                if is_ab_dual(&l.black, &m.white, p.m + 1, p.n + 1)
                    && is_ab_dual(&m.black, &l.white, p.m + 1, p.n + 1)
                {
                    HomPrediction::One
                } else {
                    HomPrediction::Zero
                }
            } else {
                HomPrediction::Unknown
            })
        }
        Family::P => {
            let (l, m) = (lambda.as_single()?, mu.as_single()?);
            let total = l.size() + m.size();
            Ok(if total < j * (j + 1) {
                HomPrediction::Zero
            } else if total == j * (j + 1) {
                if is_ab_dual(&l.transpose(), m, j, j + 1) {
                    HomPrediction::One
                } else {
                    HomPrediction::Zero
                }
            } else {
                HomPrediction::Unknown
            })
        }
        _ => Err(Error::Unsupported(format!(
            "predicted_hom_j is defined for the O, GL and P families, not {family}"
        ))),
    }
}

/// Which tensor powers contain R(label) as a direct summand.
///
/// O and P: R(λ) occurs in the k-th power iff k − |λ| is a nonnegative even
/// integer; GL: R(λ•, λ∘) occurs in [k, l] iff k − |λ•| = l − |λ∘| ≥ 0.
pub fn in_object(family: Family, label: &ObjectLabel, powers: &[usize]) -> Result<bool> {
    match family {
        Family::O { .. } | Family::P => {
            let [k] = powers else {
                return Err(Error::InvalidParameter(
                    "O/P objects are single tensor powers [k]".into(),
                ));
            };
            let size = label.as_single()?.size();
            Ok(*k >= size && (k - size) % 2 == 0)
        }
        Family::GL { .. } => {
            let [k, l] = powers else {
                return Err(Error::InvalidParameter(
                    "GL objects are mixed tensor powers [k, l]".into(),
                ));
            };
            let pair = label.as_pair()?;
            let (bk, wh) = (pair.black.size(), pair.white.size());
            Ok(*k >= bk && *l >= wh && k - bk == l - wh)
        }
        _ => Err(Error::Unsupported(format!(
            "in_object is defined for the O, GL and P families, not {family}"
        ))),
    }
}

/// The critical rank r_c at which the comparison map to the concrete
/// representation first acquires a kernel: (m+1)(n+1) for the orthosymplectic
/// and general linear specs, (n+1)(n+2)/2 for the periplectic spec, and the
/// smallest k with 2k > t for the symmetric spec.
pub fn critical_rank(spec: &RepSpec) -> usize {
    match *spec {
        RepSpec::O { m, n } | RepSpec::GL { m, n } => (m + 1) * (n + 1),
        RepSpec::P { n } => (n + 1) * (n + 2) / 2,
        RepSpec::S { t } => t / 2 + 1,
    }
}

/// Closed-form dimension of ker φ at the critical rank.
///
/// O: Σ d_λ·d_μ over dual pairs λ, μ ⊢ r_c under (m+1)×(2n+2); GL (split
/// (k, l) of r_c required): Σ d_{λ•}·d_{λ∘}·d_{dual λ∘}·d_{dual λ•} over
/// λ• ⊢ k, λ∘ ⊢ l in the (m+1)×(n+1) rectangle; P: Σ d_λ·d_μ over λ ⊢ r_c
/// with λ^t and μ (n+1)×(n+2)-dual; S: the number of set partitions of 2k
/// with more than t blocks (k = r_c).
pub fn kernel_dim_at_threshold(spec: &RepSpec, split: Option<(usize, usize)>) -> Result<u128> {
    let rc = critical_rank(spec);
    match *spec {
        RepSpec::O { m, n } => {
            let (a, b) = (m + 1, 2 * n + 2);
            let mut total: u128 = 0;
            for lambda in partitions_of_in_rect(rc, a, b) {
                let mu = ab_dual(&lambda, a, b)?;
                if mu.size() == rc {
                    total += specht_dim(&lambda) * specht_dim(&mu);
                }
            }
            Ok(total)
        }
        RepSpec::GL { m, n } => {
            let (k, l) = split.ok_or_else(|| {
                Error::InvalidParameter(
                    "the GL kernel dimension needs an explicit split (k, l) of the critical rank"
                        .into(),
                )
            })?;
            if k + l != rc {
                return Err(Error::InvalidParameter(format!(
                    "split ({k}, {l}) does not sum to the critical rank {rc}"
                )));
            }
            let (a, b) = (m + 1, n + 1);
            let mut total: u128 = 0;
            for black in partitions_of_in_rect(k, a, b) {
                let dual_black = ab_dual(&black, a, b)?;
                for white in partitions_of_in_rect(l, a, b) {
                    let dual_white = ab_dual(&white, a, b)?;
                    total += specht_dim(&black)
                        * specht_dim(&white)
                        * specht_dim(&dual_white)
                        * specht_dim(&dual_black);
                }
            }
            Ok(total)
        }
        RepSpec::P { n } => {
            let (a, b) = (n + 1, n + 2);
            let mut total: u128 = 0;
            for lambda in partitions_of(rc) {
                let lt = lambda.transpose();
                if !lt.fits_in_rect(a, b) {
                    continue;
                }
                let mu = ab_dual(&lt, a, b)?;
                if mu.size() == rc {
                    total += specht_dim(&lambda) * specht_dim(&mu);
                }
            }
            Ok(total)
        }
        RepSpec::S { t } => {
            // Set partitions of 2k into at most t blocks, via Stirling numbers
            // of the second kind; the kernel counts those with more blocks.
            let boxes = 2 * rc;
            let mut within: u128 = 0;
            for blocks in 0..=t.min(boxes) {
                within += stirling2(boxes, blocks);
            }
            Ok(bell(boxes) - within)
        }
    }
}

/// Stirling number of the second kind S(n, k).
fn stirling2(n: usize, k: usize) -> u128 {
    let mut row: Vec<u128> = vec![0; k + 1];
    if k == 0 {
        return if n == 0 { 1 } else { 0 };
    }
    row[0] = 1; // S(0, 0)
    for _ in 1..=n {
        let mut next = vec![0u128; k + 1];
        for j in 1..=k {
            next[j] = row[j - 1] + (j as u128) * row[j];
        }
        row = next;
    }
    row[k]
}

/// A symbol in a weight diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightSymbol {
    /// ∘ — neither n nor −n occurs.
    Empty,
    /// ∧ — n occurs.
    Up,
    /// ∨ — −n occurs.
    Down,
    /// × — both occur.
    Cross,
}

impl std::fmt::Display for WeightSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            WeightSymbol::Empty => '∘',
            WeightSymbol::Up => '∧',
            WeightSymbol::Down => '∨',
            WeightSymbol::Cross => '×',
        };
        write!(f, "{c}")
    }
}

/// The length-`length` prefix of the weight diagram of λ at δ = 2s > 0.
///
/// With x_i = λ^t_i − s − (i−1), the symbol at position n ∈ ℕ is ∘ if
/// neither n nor −n occurs among the x_i, ∧ if n occurs, ∨ if −n occurs,
/// and × if both do. Only the positive even δ branch is implemented.
pub fn weight_diagram(delta: i64, lambda: &Partition, length: usize) -> Result<Vec<WeightSymbol>> {
    if delta <= 0 || delta % 2 != 0 {
        return Err(Error::Unsupported(
            "weight diagrams are implemented for positive even δ only".into(),
        ));
    }
    let s = delta / 2;
    let lt = lambda.transpose();
    // x is strictly decreasing; collect every value down to −length.
    let mut xs = std::collections::HashSet::new();
    let mut i: i64 = 1;
    loop {
        let x = lt.part(i as usize) as i64 - s - (i - 1);
        if x < -(length as i64) {
            break;
        }
        xs.insert(x);
        i += 1;
    }
    Ok((0..length as i64)
        .map(|n| match (xs.contains(&n), xs.contains(&-n)) {
            (false, false) => WeightSymbol::Empty,
            (true, false) => WeightSymbol::Up,
            (false, true) => WeightSymbol::Down,
            (true, true) => WeightSymbol::Cross,
        })
        .collect())
}

/// True iff the sequence reads ∘^s ∧^{2j} ∨^{rest} for some j ≥ 0.
pub fn matches_nu_pattern(seq: &[WeightSymbol], s: usize) -> bool {
    if seq.len() < s || seq[..s].iter().any(|&c| c != WeightSymbol::Empty) {
        return false;
    }
    let rest = &seq[s..];
    let ups = rest
        .iter()
        .take_while(|&&c| c == WeightSymbol::Up)
        .count();
    ups % 2 == 0 && rest[ups..].iter().all(|&c| c == WeightSymbol::Down)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn single(parts: &[usize]) -> ObjectLabel {
        ObjectLabel::Single(p(parts))
    }

    fn pair(black: &[usize], white: &[usize]) -> ObjectLabel {
        ObjectLabel::Pair(Bipartition::new(p(black), p(white)))
    }

    #[test]
    fn param_examples() {
        assert_eq!(
            params(Family::O { delta: 3 }, 1).unwrap(),
            ParamTriple { m: 3, n: 0, r: 4 }
        );
        assert_eq!(
            params(Family::O { delta: -1 }, 1).unwrap(),
            ParamTriple { m: 1, n: 1, r: 4 }
        );
        assert_eq!(
            params(Family::GL { delta: 1 }, 1).unwrap(),
            ParamTriple { m: 1, n: 0, r: 2 }
        );
        // degenerate but permitted: δ = 0, j = 1 gives (0, 0)
        assert_eq!(
            params(Family::O { delta: 0 }, 1).unwrap(),
            ParamTriple { m: 0, n: 0, r: 1 }
        );
        // consistency: δ recovered from (m, n) in every branch
        for delta in -6..=6 {
            for j in 1..=5 {
                let t = params(Family::O { delta }, j).unwrap();
                assert_eq!(t.m as i64 - 2 * t.n as i64, delta);
                assert_eq!(t.r, (t.m + 1) * (t.n + 1));
                let t = params(Family::GL { delta }, j).unwrap();
                assert_eq!(t.m as i64 - t.n as i64, delta);
                assert_eq!(t.r, (t.m + 1) * (t.n + 1));
            }
        }
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu(Family::O { delta: 3 }, 1).unwrap(), single(&[2, 2, 2, 2]));
        assert_eq!(
            nu(Family::GL { delta: 1 }, 1).unwrap(),
            pair(&[1, 1], &[1, 1])
        );
        assert_eq!(nu(Family::P, 2).unwrap(), single(&[3, 3]));
        assert_eq!(nu(Family::O { delta: 3 }, 0).unwrap(), single(&[]));
        assert_eq!(nu(Family::O { delta: -1 }, 1).unwrap(), single(&[4, 4]));
    }

    #[test]
    fn hom_unit_examples() {
        for family in [Family::O { delta: 3 }, Family::P] {
            assert_eq!(hom_unit_dim(family, &single(&[])).unwrap(), 1);
        }
        let gl = Family::GL { delta: 1 };
        assert_eq!(hom_unit_dim(gl, &pair(&[], &[])).unwrap(), 1);
        assert_eq!(hom_unit_dim(Family::O { delta: 3 }, &single(&[2, 2, 2, 2])).unwrap(), 1);
        assert_eq!(hom_unit_dim(Family::O { delta: 3 }, &single(&[1])).unwrap(), 0);
        assert_eq!(hom_unit_dim(Family::P, &single(&[3, 3])).unwrap(), 1);
        assert_eq!(hom_unit_dim(Family::P, &single(&[3, 2])).unwrap(), 0);
    }

    #[test]
    fn in_ideal_examples() {
        let o3 = Family::O { delta: 3 };
        assert!(in_ideal(o3, 1, &single(&[2, 2, 2, 2])).unwrap());
        assert!(in_ideal(o3, 0, &single(&[])).unwrap());
        assert!(in_ideal(Family::P, 2, &single(&[2, 1])).unwrap());
        assert!(!in_ideal(Family::P, 2, &single(&[3])).unwrap());
        let sl2 = Family::SL2 { p: 2 };
        assert!(in_ideal(sl2, 2, &ObjectLabel::Weight(3)).unwrap());
        assert!(!in_ideal(sl2, 2, &ObjectLabel::Weight(2)).unwrap());
        assert!(in_ideal(Family::S { t: 4 }, 1, &single(&[1])).is_err());
    }

    #[test]
    fn lambda_set_examples() {
        assert_eq!(
            lambda_set(Family::P, 3).unwrap(),
            vec![single(&[3, 2, 1])]
        );
        assert_eq!(
            lambda_set(Family::O { delta: 1 }, 1).unwrap(),
            vec![single(&[2]), single(&[1, 1])]
        );
        assert_eq!(
            lambda_set(Family::GL { delta: 1 }, 1).unwrap(),
            vec![pair(&[], &[1, 1]), pair(&[1], &[1]), pair(&[1, 1], &[])]
        );
        assert_eq!(
            lambda_set(Family::O { delta: -1 }, 1).unwrap(),
            vec![single(&[4]), single(&[3, 1]), single(&[2, 2])]
        );
    }

    #[test]
    fn predicted_hom_examples() {
        let o = Family::O { delta: -1 };
        assert_eq!(
            predicted_hom_j(o, 1, &single(&[3, 1]), &single(&[3, 1])).unwrap(),
            HomPrediction::One
        );
        assert_eq!(
            predicted_hom_j(o, 1, &single(&[1]), &single(&[1])).unwrap(),
            HomPrediction::Zero
        );
        assert_eq!(
            predicted_hom_j(o, 1, &single(&[5, 4]), &single(&[5, 4])).unwrap(),
            HomPrediction::Unknown
        );
        // transpose enters one side only in the periplectic case
        assert_eq!(
            predicted_hom_j(Family::P, 2, &single(&[1, 1, 1]), &single(&[3])).unwrap(),
            HomPrediction::One
        );
        assert_eq!(
            predicted_hom_j(Family::P, 2, &single(&[3]), &single(&[1, 1, 1])).unwrap(),
            HomPrediction::Zero
        );
        assert_eq!(
            predicted_hom_j(Family::GL { delta: 1 }, 1, &pair(&[1], &[1]), &pair(&[1], &[1]))
                .unwrap(),
            HomPrediction::One
        );
    }

    #[test]
    fn in_object_examples() {
        let o = Family::O { delta: 3 };
        assert!(in_object(o, &single(&[2]), &[4]).unwrap());
        assert!(!in_object(o, &single(&[1]), &[4]).unwrap());
        assert!(in_object(Family::GL { delta: 1 }, &pair(&[1], &[]), &[2, 1]).unwrap());
        assert!(!in_object(Family::GL { delta: 1 }, &pair(&[1], &[]), &[2, 2]).unwrap());
    }

    #[test]
    fn critical_rank_examples() {
        assert_eq!(critical_rank(&RepSpec::O { m: 3, n: 0 }), 4);
        assert_eq!(critical_rank(&RepSpec::P { n: 1 }), 3);
        assert_eq!(critical_rank(&RepSpec::GL { m: 1, n: 0 }), 2);
        assert_eq!(critical_rank(&RepSpec::S { t: 4 }), 3);
        assert_eq!(critical_rank(&RepSpec::S { t: 5 }), 3);
    }

    #[test]
    fn kernel_dim_examples() {
        assert_eq!(
            kernel_dim_at_threshold(&RepSpec::O { m: 0, n: 1 }, None).unwrap(),
            1
        );
        assert_eq!(
            kernel_dim_at_threshold(&RepSpec::O { m: 1, n: 1 }, None).unwrap(),
            14
        );
        assert_eq!(
            kernel_dim_at_threshold(&RepSpec::O { m: 3, n: 0 }, None).unwrap(),
            14
        );
        assert_eq!(
            kernel_dim_at_threshold(&RepSpec::P { n: 1 }, None).unwrap(),
            5
        );
        assert_eq!(
            kernel_dim_at_threshold(&RepSpec::GL { m: 1, n: 0 }, Some((1, 1))).unwrap(),
            1
        );
        assert_eq!(
            kernel_dim_at_threshold(&RepSpec::S { t: 4 }, None).unwrap(),
            16
        );
        assert!(kernel_dim_at_threshold(&RepSpec::GL { m: 1, n: 0 }, None).is_err());
    }

    #[test]
    fn weight_diagram_examples() {
        use WeightSymbol::{Down, Empty, Up};
        assert_eq!(
            weight_diagram(2, &p(&[]), 4).unwrap(),
            vec![Empty, Down, Down, Down]
        );
        // ν^(1) at δ = 2 is (2, 2, 2)
        assert_eq!(
            weight_diagram(2, &p(&[2, 2, 2]), 5).unwrap(),
            vec![Empty, Up, Up, Down, Down]
        );
        assert!(weight_diagram(3, &p(&[]), 4).is_err());
        assert!(weight_diagram(-2, &p(&[]), 4).is_err());
        assert!(matches_nu_pattern(
            &weight_diagram(2, &p(&[2, 2, 2]), 8).unwrap(),
            1
        ));
        assert!(!matches_nu_pattern(&weight_diagram(2, &p(&[1]), 8).unwrap(), 1));
    }

    /// Labels of bounded size for one family (partitions or bipartitions).
    fn labels_up_to(family: Family, max: usize) -> Vec<ObjectLabel> {
        match family {
            Family::GL { .. } => {
                let mut out = Vec::new();
                for total in 0..=max {
                    for b in 0..=total {
                        for black in partitions_of(b) {
                            for white in partitions_of(total - b) {
                                out.push(ObjectLabel::Pair(Bipartition::new(
                                    black.clone(),
                                    white,
                                )));
                            }
                        }
                    }
                }
                out
            }
            Family::SL2 { .. } => (0..=max as u64).map(ObjectLabel::Weight).collect(),
            _ => (0..=max)
                .flat_map(|n| partitions_of(n).into_iter().map(ObjectLabel::Single))
                .collect(),
        }
    }

    fn small_families() -> Vec<Family> {
        let mut fams = vec![Family::P, Family::SL2 { p: 2 }, Family::SL2 { p: 3 }];
        for delta in -3..=3 {
            fams.push(Family::O { delta });
            fams.push(Family::GL { delta });
        }
        fams
    }

    #[test]
    fn ideal_chain_property() {
        for family in small_families() {
            for label in labels_up_to(family, 8) {
                for j in 0..=3 {
                    if in_ideal(family, j + 1, &label).unwrap() {
                        assert!(
                            in_ideal(family, j, &label).unwrap(),
                            "{family} j={j} label={label}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn generators_sit_at_the_boundary() {
        for family in small_families() {
            if matches!(family, Family::SL2 { .. }) {
                continue;
            }
            for j in 1..=3 {
                for label in lambda_set(family, j).unwrap() {
                    assert!(in_ideal(family, j, &label).unwrap(), "{family} j={j} {label}");
                    assert!(
                        !in_ideal(family, j + 1, &label).unwrap(),
                        "{family} j={j} {label}"
                    );
                }
            }
        }
    }

    #[test]
    fn nu_lies_in_its_ideal() {
        for family in small_families() {
            if matches!(family, Family::SL2 { .. }) {
                continue;
            }
            for j in 0..=4 {
                let v = nu(family, j).unwrap();
                assert!(in_ideal(family, j, &v).unwrap(), "{family} j={j} ν={v}");
                assert_eq!(hom_unit_dim(family, &v).unwrap(), 1);
            }
        }
    }

    fn label_contained(a: &ObjectLabel, b: &ObjectLabel) -> bool {
        match (a, b) {
            (ObjectLabel::Single(x), ObjectLabel::Single(y)) => x.contained_in(y),
            (ObjectLabel::Pair(x), ObjectLabel::Pair(y)) => {
                x.black.contained_in(&y.black) && x.white.contained_in(&y.white)
            }
            _ => false,
        }
    }

    #[test]
    fn ideals_are_upward_closed() {
        for family in small_families() {
            if matches!(family, Family::SL2 { .. }) {
                continue;
            }
            let labels = labels_up_to(family, 6);
            for j in 1..=2 {
                let members: Vec<_> = labels
                    .iter()
                    .filter(|l| in_ideal(family, j, l).unwrap())
                    .collect();
                for small in &members {
                    for big in &labels {
                        if label_contained(small, big) {
                            assert!(
                                in_ideal(family, j, big).unwrap(),
                                "{family} j={j}: {small} ⊆ {big}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn predicted_hom_symmetry() {
        // O: fully symmetric. GL: symmetric under swapping λ and μ.
        let labels_o = labels_up_to(Family::O { delta: 1 }, 6);
        for delta in [-2, 1, 3] {
            let fam = Family::O { delta };
            for a in &labels_o {
                for b in &labels_o {
                    assert_eq!(
                        predicted_hom_j(fam, 1, a, b).unwrap(),
                        predicted_hom_j(fam, 1, b, a).unwrap()
                    );
                }
            }
        }
        let labels_gl = labels_up_to(Family::GL { delta: 1 }, 4);
        for delta in [-1, 0, 1] {
            let fam = Family::GL { delta };
            for a in &labels_gl {
                for b in &labels_gl {
                    assert_eq!(
                        predicted_hom_j(fam, 1, a, b).unwrap(),
                        predicted_hom_j(fam, 1, b, a).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn weight_pattern_matches_hom_unit() {
        for delta in [2i64, 4] {
            let s = (delta / 2) as usize;
            let family = Family::O { delta };
            for size in 0..=8 {
                for lambda in partitions_of(size) {
                    let len = size + s + 3;
                    let seq = weight_diagram(delta, &lambda, len).unwrap();
                    let expected = hom_unit_dim(family, &ObjectLabel::Single(lambda.clone()))
                        .unwrap()
                        == 1;
                    assert_eq!(
                        matches_nu_pattern(&seq, s),
                        expected,
                        "δ={delta} λ={lambda}"
                    );
                }
            }
        }
    }
}
