//! Exact linear algebra over diagram bases: morphism spaces, algebra products
//! with loop evaluation, Markov trace forms and negligible radicals, two-sided
//! and tensor-ideal closures, and the Jones-Wenzl quasi-idempotent solver.
//!
//! Products evaluate loops at δ (t for the partition category). Periplectic
//! composition is signed; its structure constants are *defined* through a
//! faithful matrix realization (see the oracle module) and passed in here as a
//! [`PeriTable`] — the plain product entry points reject the periplectic
//! flavor rather than guess signs.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::diagram::{enumerate_diagrams, Diagram, Flavor, Row, Shape};
use crate::linalg::{Echelon, SparseVec};
use crate::{scalar, Error, Result, Scalar};

/// Flavor plus the loop parameter δ (t for the partition category; ignored
/// for the periplectic flavor, whose loops evaluate to 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AlgebraParams {
    pub flavor: Flavor,
    pub delta: i64,
}

impl AlgebraParams {
    pub fn new(flavor: Flavor, delta: i64) -> AlgebraParams {
        AlgebraParams { flavor, delta }
    }

    /// δ^loops (t^loops), as an exact scalar.
    pub fn loop_factor(&self, loops: usize) -> Scalar {
        let mut out = Scalar::one();
        let d = scalar(self.delta);
        for _ in 0..loops {
            out *= &d;
        }
        out
    }
}

/// A finite exact-scalar linear combination of same-shape diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub params: AlgebraParams,
    pub shape: Shape,
    terms: BTreeMap<Diagram, Scalar>,
}

impl Morphism {
    pub fn zero(params: AlgebraParams, shape: Shape) -> Morphism {
        Morphism {
            params,
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(params: AlgebraParams, d: Diagram, coeff: Scalar) -> Morphism {
        let mut m = Morphism::zero(params, d.shape().clone());
        m.add_term(d, coeff);
        m
    }

    pub fn identity(params: AlgebraParams, row: Row) -> Morphism {
        let d = Diagram::identity(params.flavor, row);
        Morphism::from_diagram(params, d, Scalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &Diagram) -> Scalar {
        self.terms.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `coeff`·d, dropping the term if the total cancels.
    pub fn add_term(&mut self, d: Diagram, coeff: Scalar) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(d.shape(), &self.shape);
        match self.terms.entry(d) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.params != other.params || self.shape != other.shape {
            return Err(Error::ShapeMismatch("morphism addition".into()));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    /// Rescales so the coefficients become coprime integers with the first
    /// term positive. Keeps coefficient sizes in check during long closures.
    pub fn normalized_primitive(&self) -> Morphism {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;
        let mut g = BigInt::from(0);
        let mut l = BigInt::from(1);
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            return self.clone();
        }
        if let Some(c) = self.terms.values().next() {
            if c.numer() < &BigInt::from(0) {
                g = -g;
            }
        }
        let factor = Scalar::new(l, g);
        if factor.is_one() {
            return self.clone();
        }
        self.scale(&factor)
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        if c.is_zero() {
            return Morphism::zero(self.params, self.shape.clone());
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// The star (horizontal reflection) anti-automorphism, extended linearly.
    pub fn star(&self) -> Morphism {
        let mut out = Morphism::zero(
            self.params,
            Shape {
                source: self.shape.target.clone(),
                target: self.shape.source.clone(),
            },
        );
        for (d, c) in &self.terms {
            out.add_term(d.star(), c.clone());
        }
        out
    }

    /// Tensor with the identity on `row` (on the right).
    pub fn tensor_identity(&self, row: Row) -> Result<Morphism> {
        let id = Diagram::identity(self.params.flavor, row);
        let shape = Shape {
            source: self.shape.source.concat(&id.shape().source)?,
            target: self.shape.target.concat(&id.shape().target)?,
        };
        let mut out = Morphism::zero(self.params, shape);
        for (d, c) in &self.terms {
            out.add_term(Diagram::tensor(d, &id)?, c.clone());
        }
        Ok(out)
    }

    /// Coefficient vector over an enumerated diagram basis.
    pub fn to_sparse(&self, index: &BTreeMap<Diagram, usize>) -> SparseVec {
        let mut v: SparseVec = self
            .terms
            .iter()
            .map(|(d, c)| (*index.get(d).expect("diagram outside basis"), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }
}

/// Signed periplectic structure constants: the products d1·d2 of endomorphism
/// diagrams at a fixed rank r, expressed in the diagram basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PeriTable {
    pub r: usize,
    /// realization parameter the constants were solved at
    pub n: usize,
    /// coefficients c with d1·d2 = Σ_d c_d d; keys in enumeration order
    pub products: Vec<((usize, usize), Vec<(usize, String)>)>,
}

impl PeriTable {
    /// Product of two basis-diagram indices as a coefficient list.
    pub fn product(&self, i: usize, j: usize) -> Option<Vec<(usize, Scalar)>> {
        self.products.iter().find(|((a, b), _)| *a == i && *b == j).map(|(_, cs)| {
            cs.iter()
                .map(|(k, s)| (*k, parse_scalar(s).expect("cached scalar")))
                .collect()
        })
    }
}

/// Renders a scalar as "p/q" (or "p" for integers).
pub fn scalar_string(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses "p" or "p/q".
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let parse_int = |t: &str| {
        t.parse::<num_bigint::BigInt>()
            .map_err(|e| Error::InvalidParameter(format!("bad scalar {t}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(s)?)),
        Some((p, q)) => Ok(Scalar::new(parse_int(p)?, parse_int(q)?)),
    }
}

/// Bilinear product f·g = f∘g with loops evaluated at δ (t). The periplectic
/// flavor is rejected here; use [`multiply_periplectic`].
pub fn multiply(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if f.params != g.params {
        return Err(Error::FlavorMismatch("morphism product params".into()));
    }
    if f.params.flavor == Flavor::Periplectic {
        return Err(Error::Unsupported(
            "periplectic products need structure constants; use multiply_periplectic".into(),
        ));
    }
    if f.shape.source != g.shape.target {
        return Err(Error::ShapeMismatch("morphism product".into()));
    }
    let mut out = Morphism::zero(
        f.params,
        Shape {
            source: g.shape.source.clone(),
            target: f.shape.target.clone(),
        },
    );
    for (d1, c1) in &f.terms {
        for (d2, c2) in &g.terms {
            let (d, loops) = Diagram::compose(d1, d2)?;
            out.add_term(d, c1 * c2 * f.params.loop_factor(loops));
        }
    }
    Ok(out)
}

/// Periplectic product at rank r via cached signed structure constants.
pub fn multiply_periplectic(
    f: &Morphism,
    g: &Morphism,
    basis: &[Diagram],
    index: &BTreeMap<Diagram, usize>,
    table: &PeriTable,
) -> Result<Morphism> {
    if f.params.flavor != Flavor::Periplectic || g.params.flavor != Flavor::Periplectic {
        return Err(Error::FlavorMismatch("expected periplectic morphisms".into()));
    }
    if f.shape != g.shape || f.shape.source != f.shape.target {
        return Err(Error::ShapeMismatch(
            "periplectic products are supported on square shapes".into(),
        ));
    }
    let mut out = Morphism::zero(f.params, f.shape.clone());
    for (d1, c1) in &f.terms {
        for (d2, c2) in &g.terms {
            let i = index[d1];
            let j = index[d2];
            let coeffs = table.product(i, j).ok_or_else(|| {
                Error::InvalidParameter("product missing from periplectic table".into())
            })?;
            for (k, c) in coeffs {
                out.add_term(basis[k].clone(), c1 * c2 * c);
            }
        }
    }
    Ok(out)
}

/// Markov-closure trace of an endomorphism: strand p of the source is joined
/// to strand p of the target; each diagram term contributes δ^{#closed
/// components}. Rejected for the periplectic flavor (no braided trace form).
pub fn trace(f: &Morphism) -> Result<Scalar> {
    if f.params.flavor == Flavor::Periplectic {
        return Err(Error::Unsupported(
            "no trace form for the periplectic flavor".into(),
        ));
    }
    if f.shape.source != f.shape.target {
        return Err(Error::ShapeMismatch("trace needs a square shape".into()));
    }
    let r = f.shape.source_len();
    let mut out = Scalar::zero();
    for (d, c) in f.terms() {
        // union-find over the 2r dots; close p with r+p
        let mut parent: Vec<usize> = (0..2 * r).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        let union = |parent: &mut Vec<usize>, x: usize, y: usize| {
            let (rx, ry) = (find(parent, x), find(parent, y));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
            }
        };
        for b in d.blocks() {
            for w in b.windows(2) {
                union(&mut parent, w[0], w[1]);
            }
        }
        for p in 0..r {
            union(&mut parent, p, r + p);
        }
        let mut roots = std::collections::BTreeSet::new();
        for x in 0..2 * r {
            let root = find(&mut parent, x);
            roots.insert(root);
        }
        out += c * f.params.loop_factor(roots.len());
    }
    Ok(out)
}

/// dim Hom(a,b) − rank of the trace pairing P[d,d'] = tr(d'∘d) over basis
/// diagrams d: a→b and d': b→a. These are the negligible morphisms.
pub fn negligible_dim(params: AlgebraParams, shape: &Shape) -> Result<usize> {
    if params.flavor == Flavor::Periplectic {
        return Err(Error::Unsupported(
            "no trace form for the periplectic flavor".into(),
        ));
    }
    let basis = enumerate_diagrams(params.flavor, shape)?;
    let op_shape = Shape {
        source: shape.target.clone(),
        target: shape.source.clone(),
    };
    let op_basis = enumerate_diagrams(params.flavor, &op_shape)?;
    let mut rows: Vec<SparseVec> = Vec::new();
    for d in &basis {
        let md = Morphism::from_diagram(params, d.clone(), Scalar::one());
        let mut row: SparseVec = Vec::new();
        for (j, dp) in op_basis.iter().enumerate() {
            let mdp = Morphism::from_diagram(params, dp.clone(), Scalar::one());
            let t = trace(&multiply(&mdp, &md)?)?;
            if !t.is_zero() {
                row.push((j, t));
            }
        }
        rows.push(row);
    }
    Ok(basis.len() - crate::linalg::rank(rows))
}

/// Basis of the radical of the trace pairing on Hom(a,b) — the negligible
/// morphisms of that shape.
pub fn negligible_radical(params: AlgebraParams, shape: &Shape) -> Result<Vec<Morphism>> {
    if params.flavor == Flavor::Periplectic {
        return Err(Error::Unsupported(
            "no trace form for the periplectic flavor".into(),
        ));
    }
    let basis = enumerate_diagrams(params.flavor, shape)?;
    let op_shape = Shape {
        source: shape.target.clone(),
        target: shape.source.clone(),
    };
    let op_basis = enumerate_diagrams(params.flavor, &op_shape)?;
    let mut rows: Vec<SparseVec> = Vec::new();
    for d in &basis {
        let md = Morphism::from_diagram(params, d.clone(), Scalar::one());
        let mut row: SparseVec = Vec::new();
        for (j, dp) in op_basis.iter().enumerate() {
            let mdp = Morphism::from_diagram(params, dp.clone(), Scalar::one());
            let t = trace(&multiply(&mdp, &md)?)?;
            if !t.is_zero() {
                row.push((j, t));
            }
        }
        rows.push(row);
    }
    let null = crate::linalg::kernel(&rows);
    Ok(null
        .into_iter()
        .map(|coeffs| {
            let mut m = Morphism::zero(params, shape.clone());
            for (i, c) in coeffs.into_iter().enumerate() {
                m.add_term(basis[i].clone(), c);
            }
            m
        })
        .collect())
}

/// An exact row-reduced subspace of a Hom space over its enumerated diagram
/// basis.
pub struct Subspace {
    pub params: AlgebraParams,
    pub shape: Shape,
    diagrams: Vec<Diagram>,
    index: BTreeMap<Diagram, usize>,
    ech: Echelon,
}

impl Subspace {
    pub fn empty(params: AlgebraParams, shape: Shape) -> Result<Subspace> {
        let diagrams = enumerate_diagrams(params.flavor, &shape)?;
        let index = diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i))
            .collect();
        Ok(Subspace {
            params,
            shape,
            diagrams,
            index,
            ech: Echelon::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.diagrams.len()
    }

    /// Inserts a morphism; true iff it enlarged the span.
    pub fn insert(&mut self, m: &Morphism) -> bool {
        self.ech.insert(m.to_sparse(&self.index))
    }

    pub fn contains(&self, m: &Morphism) -> bool {
        self.ech.contains(m.to_sparse(&self.index))
    }

    /// Canonical reduced basis, as morphisms.
    pub fn basis_morphisms(&self) -> Vec<Morphism> {
        self.ech
            .basis()
            .into_iter()
            .map(|row| {
                let mut m = Morphism::zero(self.params, self.shape.clone());
                for (i, c) in row {
                    m.add_term(self.diagrams[i].clone(), c);
                }
                m
            })
            .collect()
    }
}

/// The standard generating diagrams of the endomorphism algebra on `row`
/// (used to close ideals under multiplication; every basis diagram is a
/// product of these).
pub fn algebra_generators(flavor: Flavor, row: &Row) -> Vec<Diagram> {
    let n = row.len();
    let mut gens = Vec::new();
    for p in 0..n.saturating_sub(1) {
        let same_color = row.color(p) == row.color(p + 1);
        match flavor {
            Flavor::TemperleyLieb => {
                gens.push(Diagram::hook_at(flavor, n, p));
            }
            Flavor::PartitionCat => {
                gens.push(Diagram::crossing_at(flavor, n, p));
                gens.push(Diagram::merge_at(n, p));
            }
            Flavor::WalledBrauer => {
                if same_color {
                    gens.push(crossing_colored(row, p));
                } else {
                    gens.push(hook_colored(row, p));
                }
            }
            Flavor::Brauer | Flavor::Periplectic => {
                gens.push(Diagram::crossing_at(flavor, n, p));
                gens.push(Diagram::hook_at(flavor, n, p));
            }
        }
    }
    if flavor == Flavor::PartitionCat {
        for p in 0..n {
            gens.push(Diagram::singleton_at(n, p));
        }
    }
    gens
}

fn crossing_colored(row: &Row, p: usize) -> Diagram {
    let n = row.len();
    let mut blocks = Vec::new();
    for i in 0..n {
        let t = if i == p {
            p + 1
        } else if i == p + 1 {
            p
        } else {
            i
        };
        blocks.push(vec![i, n + t]);
    }
    Diagram::new(
        Flavor::WalledBrauer,
        Shape {
            source: row.clone(),
            target: row.clone(),
        },
        blocks,
    )
    .expect("valid colored crossing")
}

fn hook_colored(row: &Row, p: usize) -> Diagram {
    let n = row.len();
    let mut blocks = vec![vec![p, p + 1], vec![n + p, n + p + 1]];
    for i in 0..n {
        if i != p && i != p + 1 {
            blocks.push(vec![i, n + i]);
        }
    }
    Diagram::new(
        Flavor::WalledBrauer,
        Shape {
            source: row.clone(),
            target: row.clone(),
        },
        blocks,
    )
    .expect("valid colored hook")
}

/// Smallest multiplication-closed subspace of End(row) containing the
/// generators: closes under left multiplication by the algebra generators
/// first, then right, repeating to a fixpoint. Deterministic.
///
/// `peri` supplies structure constants when the flavor is periplectic.
pub fn two_sided_ideal(
    params: AlgebraParams,
    shape: &Shape,
    generators: &[Morphism],
    peri: Option<&PeriTable>,
) -> Result<Subspace> {
    if shape.source != shape.target {
        return Err(Error::ShapeMismatch("ideals live in square shapes".into()));
    }
    let mut space = Subspace::empty(params, shape.clone())?;
    if params.flavor == Flavor::Periplectic && peri.is_none() {
        return Err(Error::Unsupported(
            "periplectic ideal closure needs a structure-constant table".into(),
        ));
    }
    let gen_diagrams = algebra_generators(params.flavor, &shape.source);
    let gen_morphisms: Vec<Morphism> = gen_diagrams
        .iter()
        .map(|d| Morphism::from_diagram(params, d.clone(), Scalar::one()))
        .collect();
    let basis = space.diagrams.clone();
    let index = space.index.clone();
    let mul = |a: &Morphism, b: &Morphism| -> Result<Morphism> {
        match peri {
            Some(t) => multiply_periplectic(a, b, &basis, &index, t),
            None => multiply(a, b),
        }
    };
    let mut worklist: Vec<Morphism> = Vec::new();
    for g in generators {
        let g = g.normalized_primitive();
        if space.insert(&g) {
            worklist.push(g);
        }
    }
    while let Some(v) = worklist.pop() {
        let mut products = Vec::new();
        for g in &gen_morphisms {
            products.push(mul(g, &v)?.normalized_primitive()); // left first
        }
        for g in &gen_morphisms {
            products.push(mul(&v, g)?.normalized_primitive());
        }
        for p in products {
            if space.insert(&p) {
                worklist.push(p);
            }
        }
    }
    Ok(space)
}

/// The two-sided ideal of F ⊗ I^{r−r_c} in the rank-r endomorphism algebra.
pub fn tensor_ideal_truncation(f: &Morphism, r: usize) -> Result<Subspace> {
    if f.shape.source != f.shape.target {
        return Err(Error::ShapeMismatch("generator must be an endomorphism".into()));
    }
    let rc = f.shape.source_len();
    if r < rc {
        return Err(Error::InvalidParameter(format!(
            "truncation rank {r} below generator rank {rc}"
        )));
    }
    if !matches!(f.shape.source, Row::Plain(_)) {
        return Err(Error::Unsupported(
            "truncation implemented for plain rows".into(),
        ));
    }
    let padded = f.tensor_identity(Row::Plain(r - rc))?;
    two_sided_ideal(f.params, &padded.shape.clone(), &[padded], None)
}

/// True iff d∘f = 0 for every basis diagram d containing a cup and f∘d' = 0
/// for every basis diagram d' containing a cap.
pub fn annihilated_by_cups_caps(f: &Morphism) -> Result<bool> {
    let basis = enumerate_diagrams(f.params.flavor, &f.shape)?;
    for d in &basis {
        let (_, cups, caps) = d.diagram_stats()?;
        let md = Morphism::from_diagram(f.params, d.clone(), Scalar::one());
        if cups > 0 && !multiply(&md, f)?.is_zero() {
            return Ok(false);
        }
        if caps > 0 && !multiply(f, &md)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Jones-Wenzl element of TL_{l−1}(δ): coefficient 1 on the identity
/// diagram, annihilated by every cup/cap-containing diagram. Errors when no
/// or no unique such element exists. Supported for the rational root-of-unity
/// values δ ∈ {0, ±1}.
pub fn jones_wenzl(l: usize, delta: i64) -> Result<Morphism> {
    if l < 2 {
        return Err(Error::InvalidParameter("need l ≥ 2".into()));
    }
    if !(-1..=1).contains(&delta) {
        return Err(Error::Unsupported(
            "only the rational root-of-unity values δ ∈ {0, ±1} are supported".into(),
        ));
    }
    let n = l - 1;
    let params = AlgebraParams::new(Flavor::TemperleyLieb, delta);
    let shape = Shape::plain(n, n);
    let basis = enumerate_diagrams(Flavor::TemperleyLieb, &shape)?;
    let identity = Diagram::identity_plain(Flavor::TemperleyLieb, n);
    // Unknowns x_d; constraints: d'∘(Σ x_d d) = 0 and (Σ x_d d)∘d' = 0 for
    // every d' with a cup (resp. cap). Solve by a kernel computation where
    // row_d stacks the constraint coordinates contributed by diagram d.
    let mut constraint_index: BTreeMap<(usize, Diagram), usize> = BTreeMap::new();
    let mut rows: Vec<SparseVec> = Vec::new();
    for d in &basis {
        let md = Morphism::from_diagram(params, d.clone(), Scalar::one());
        let mut row_entries: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (side, dp) in basis.iter().flat_map(|dp| [(0usize, dp), (1, dp)]) {
            let (_, cups, caps) = dp.diagram_stats()?;
            let relevant = if side == 0 { cups > 0 } else { caps > 0 };
            if !relevant {
                continue;
            }
            let mdp = Morphism::from_diagram(params, dp.clone(), Scalar::one());
            let product = if side == 0 {
                multiply(&mdp, &md)?
            } else {
                multiply(&md, &mdp)?
            };
            for (out_d, c) in product.terms() {
                let key = (side * basis.len() + basis.iter().position(|b| b == dp).unwrap(), out_d.clone());
                let next = constraint_index.len();
                let idx = *constraint_index.entry(key).or_insert(next);
                *row_entries.entry(idx).or_insert_with(Scalar::zero) += c;
            }
        }
        let mut row: SparseVec = row_entries
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        row.sort_by_key(|(i, _)| *i);
        rows.push(row);
    }
    let null = crate::linalg::kernel(&rows);
    let id_pos = basis.iter().position(|d| d == &identity).unwrap();
    let candidates: Vec<&Vec<Scalar>> = null.iter().filter(|v| !v[id_pos].is_zero()).collect();
    if candidates.is_empty() {
        return Err(Error::NoSolution(
            "no cup/cap-annihilated element with identity coefficient".into(),
        ));
    }
    if null.len() > 1 {
        return Err(Error::NoSolution(
            "annihilated element is not unique".into(),
        ));
    }
    let v = candidates[0];
    let norm = v[id_pos].clone();
    let mut f = Morphism::zero(params, shape);
    for (i, c) in v.iter().enumerate() {
        f.add_term(basis[i].clone(), c / norm.clone());
    }
    Ok(f)
}

/// Tests f² = αf, returning the witness α. The zero morphism yields (true, 0).
pub fn is_quasi_idempotent(f: &Morphism) -> Result<(bool, Scalar)> {
    if f.shape.source != f.shape.target {
        return Err(Error::ShapeMismatch("square shape required".into()));
    }
    if f.is_zero() {
        return Ok((true, Scalar::zero()));
    }
    let f2 = multiply(f, f)?;
    let (d0, c0) = f.terms().next().expect("nonzero");
    let alpha = f2.coeff(d0) / c0;
    Ok((f2 == f.scale(&alpha), alpha))
}

/// Like [`is_quasi_idempotent`] but through a periplectic product table.
pub fn is_quasi_idempotent_periplectic(
    f: &Morphism,
    basis: &[Diagram],
    index: &BTreeMap<Diagram, usize>,
    table: &PeriTable,
) -> Result<(bool, Scalar)> {
    if f.is_zero() {
        return Ok((true, Scalar::zero()));
    }
    let f2 = multiply_periplectic(f, f, basis, index, table)?;
    let (d0, c0) = f.terms().next().expect("nonzero");
    let alpha = f2.coeff(d0) / c0;
    Ok((f2 == f.scale(&alpha), alpha))
}

// ---------------------------------------------------------------------------
// JSON interface
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermJson {
    diagram: Diagram,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct MorphismJson {
    params: AlgebraParams,
    shape: Shape,
    terms: Vec<TermJson>,
}

impl Serialize for Morphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MorphismJson {
            params: self.params,
            shape: self.shape.clone(),
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermJson {
                    diagram: d.clone(),
                    coeff: scalar_string(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Morphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MorphismJson::deserialize(d)?;
        let mut m = Morphism::zero(raw.params, raw.shape);
        for t in raw.terms {
            let c = parse_scalar(&t.coeff).map_err(serde::de::Error::custom)?;
            m.add_term(t.diagram, c);
        }
        Ok(m)
    }
}
