//! Flavored diagram combinatorics: construction, enumeration, composition
//! with loop counting, tensor product, reflection, planarity and slice
//! decomposition.
//!
//! Dots are numbered 0..a−1 on the source row (left to right) and a..a+b−1 on
//! the target row. Connectivity is a perfect matching for the matching flavors
//! and an arbitrary set partition for the partition category. Loop counts are
//! returned separately from composition so scalar evaluation (δ^loops or
//! t^loops) stays in the algebra layer; periplectic diagrams share the Brauer
//! connectivity datum and their signed product is deliberately not defined
//! here.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Diagram flavor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Flavor {
    Brauer,
    WalledBrauer,
    TemperleyLieb,
    PartitionCat,
    Periplectic,
}

impl Flavor {
    /// True for flavors whose connectivity is a perfect matching.
    pub fn is_matching(self) -> bool {
        !matches!(self, Flavor::PartitionCat)
    }

    pub fn is_colored(self) -> bool {
        matches!(self, Flavor::WalledBrauer)
    }
}

/// Dot color for walled diagrams: Black = the natural object •, White = its
/// dual ∘.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// A row of dots: a plain count, or a color sequence for walled diagrams.
///
/// Walled rows are arbitrary color sequences; the signature `[k,l]` (k black
/// dots then l white) is the special case produced by [`Row::signature`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    Plain(usize),
    Colored(Vec<Color>),
}

impl Row {
    pub fn len(&self) -> usize {
        match self {
            Row::Plain(n) => *n,
            Row::Colored(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Color of the i-th dot; Black for plain rows.
    pub fn color(&self, i: usize) -> Color {
        match self {
            Row::Plain(_) => Color::Black,
            Row::Colored(v) => v[i],
        }
    }

    /// The signature row: k black dots followed by l white dots.
    pub fn signature(k: usize, l: usize) -> Row {
        let mut v = vec![Color::Black; k];
        v.extend(vec![Color::White; l]);
        Row::Colored(v)
    }

    /// Componentwise color flip (the dual object's row).
    pub fn flipped(&self) -> Row {
        match self {
            Row::Plain(n) => Row::Plain(*n),
            Row::Colored(v) => Row::Colored(v.iter().map(|c| c.flip()).collect()),
        }
    }

    /// Concatenation (tensor product of rows).
    pub fn concat(&self, other: &Row) -> Result<Row> {
        match (self, other) {
            (Row::Plain(a), Row::Plain(b)) => Ok(Row::Plain(a + b)),
            (Row::Colored(a), Row::Colored(b)) => {
                let mut v = a.clone();
                v.extend_from_slice(b);
                Ok(Row::Colored(v))
            }
            _ => Err(Error::ShapeMismatch(
                "cannot concatenate plain and colored rows".into(),
            )),
        }
    }
}

/// Source and target rows of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    pub source: Row,
    pub target: Row,
}

impl Shape {
    pub fn plain(a: usize, b: usize) -> Shape {
        Shape {
            source: Row::Plain(a),
            target: Row::Plain(b),
        }
    }

    pub fn source_len(&self) -> usize {
        self.source.len()
    }

    pub fn target_len(&self) -> usize {
        self.target.len()
    }

    pub fn total_dots(&self) -> usize {
        self.source.len() + self.target.len()
    }
}

/// A flavored diagram in canonical form: blocks sorted ascending, block list
/// sorted by first element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    flavor: Flavor,
    shape: Shape,
    blocks: Vec<Vec<usize>>,
}

fn canonicalize(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

impl Diagram {
    /// Builds a diagram, validating the flavor's connectivity constraints and
    /// normalizing to canonical form.
    pub fn new(flavor: Flavor, shape: Shape, blocks: Vec<Vec<usize>>) -> Result<Diagram> {
        let n = shape.total_dots();
        let blocks = canonicalize(blocks);
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidParameter("empty block".into()));
            }
            for &d in block {
                if d >= n || seen[d] {
                    return Err(Error::InvalidParameter(format!(
                        "dot {d} out of range or repeated"
                    )));
                }
                seen[d] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidParameter(
                "every dot must belong to a block".into(),
            ));
        }
        if flavor.is_matching() && blocks.iter().any(|b| b.len() != 2) {
            return Err(Error::InvalidParameter(
                "matching flavors require blocks of size 2".into(),
            ));
        }
        match flavor {
            Flavor::WalledBrauer => {
                if !matches!(shape.source, Row::Colored(_)) || !matches!(shape.target, Row::Colored(_))
                {
                    return Err(Error::ShapeMismatch(
                        "walled diagrams require colored rows".into(),
                    ));
                }
                let a = shape.source_len();
                let color = |d: usize| {
                    if d < a {
                        shape.source.color(d)
                    } else {
                        shape.target.color(d - a)
                    }
                };
                for b in &blocks {
                    let (x, y) = (b[0], b[1]);
                    let same_row = (x < a) == (y < a);
                    if same_row {
                        // cups/caps connect different colors
                        if color(x) == color(y) {
                            return Err(Error::InvalidParameter(
                                "walled arc must connect opposite colors".into(),
                            ));
                        }
                    } else if color(x) != color(y) {
                        return Err(Error::InvalidParameter(
                            "walled propagating line must connect equal colors".into(),
                        ));
                    }
                }
            }
            Flavor::TemperleyLieb => {
                let d = Diagram {
                    flavor,
                    shape: shape.clone(),
                    blocks: blocks.clone(),
                };
                if !d.is_planar() {
                    return Err(Error::InvalidParameter(
                        "Temperley-Lieb diagrams must be non-crossing".into(),
                    ));
                }
            }
            _ => {
                if !flavor.is_colored()
                    && (matches!(shape.source, Row::Colored(_))
                        || matches!(shape.target, Row::Colored(_)))
                {
                    return Err(Error::ShapeMismatch(
                        "only walled diagrams carry colored rows".into(),
                    ));
                }
            }
        }
        Ok(Diagram {
            flavor,
            shape,
            blocks,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn source_len(&self) -> usize {
        self.shape.source_len()
    }

    pub fn target_len(&self) -> usize {
        self.shape.target_len()
    }

    /// The identity diagram on a row.
    pub fn identity(flavor: Flavor, row: Row) -> Diagram {
        let n = row.len();
        let blocks = (0..n).map(|i| vec![i, n + i]).collect();
        Diagram {
            flavor,
            shape: Shape {
                source: row.clone(),
                target: row,
            },
            blocks: canonicalize(blocks),
        }
    }

    /// The identity on n plain strands.
    pub fn identity_plain(flavor: Flavor, n: usize) -> Diagram {
        Diagram::identity(flavor, Row::Plain(n))
    }

    /// Partner of a dot (matching flavors).
    pub fn partner(&self, dot: usize) -> usize {
        for b in &self.blocks {
            if b.len() == 2 {
                if b[0] == dot {
                    return b[1];
                }
                if b[1] == dot {
                    return b[0];
                }
            }
        }
        panic!("dot {dot} has no partner");
    }

    /// Composition d1 ∘ d2 where d2: a → b and d1: b → c, returning the
    /// composite a → c together with the number of closed components confined
    /// to the middle row.
    pub fn compose(d1: &Diagram, d2: &Diagram) -> Result<(Diagram, usize)> {
        if d1.flavor != d2.flavor {
            return Err(Error::FlavorMismatch(format!(
                "{:?} vs {:?}",
                d1.flavor, d2.flavor
            )));
        }
        if d1.shape.source != d2.shape.target {
            return Err(Error::ShapeMismatch(format!(
                "middle rows differ: {:?} vs {:?}",
                d1.shape.source, d2.shape.target
            )));
        }
        let a = d2.source_len();
        let b = d2.target_len();
        let c = d1.target_len();
        // glued dot indices: 0..a = result source, a..a+b = middle, a+b..a+b+c
        // = result target
        let mut uf = UnionFind::new(a + b + c);
        // d2 dots already use result-source/middle indices
        for block in &d2.blocks {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        // d1: source i → a+i (middle), target j → a+b+j
        for block in &d1.blocks {
            let mapped: Vec<usize> = block
                .iter()
                .map(|&d| if d < b { a + d } else { a + b + (d - b) })
                .collect();
            for w in mapped.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        // collect classes
        let mut class_members: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for d in 0..a + b + c {
            class_members.entry(uf.find(d)).or_default().push(d);
        }
        let mut loops = 0;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (_, members) in class_members {
            let outer: Vec<usize> = members
                .iter()
                .filter(|&&d| d < a || d >= a + b)
                .map(|&d| if d < a { d } else { d - b })
                .collect();
            if outer.is_empty() {
                loops += 1;
            } else {
                blocks.push(outer);
            }
        }
        let shape = Shape {
            source: d2.shape.source.clone(),
            target: d1.shape.target.clone(),
        };
        let result = Diagram::new(d1.flavor, shape, blocks)?;
        Ok((result, loops))
    }

    /// Side-by-side juxtaposition; shapes add (rows concatenate).
    pub fn tensor(d1: &Diagram, d2: &Diagram) -> Result<Diagram> {
        if d1.flavor != d2.flavor {
            return Err(Error::FlavorMismatch(format!(
                "{:?} vs {:?}",
                d1.flavor, d2.flavor
            )));
        }
        let (a1, b1) = (d1.source_len(), d1.target_len());
        let (a2, _b2) = (d2.source_len(), d2.target_len());
        let shape = Shape {
            source: d1.shape.source.concat(&d2.shape.source)?,
            target: d1.shape.target.concat(&d2.shape.target)?,
        };
        let mut blocks = Vec::new();
        for b in &d1.blocks {
            blocks.push(
                b.iter()
                    .map(|&d| if d < a1 { d } else { a1 + a2 + (d - a1) })
                    .collect(),
            );
        }
        for b in &d2.blocks {
            blocks.push(
                b.iter()
                    .map(|&d| if d < a2 { a1 + d } else { a1 + a2 + b1 + (d - a2) })
                    .collect(),
            );
        }
        Diagram::new(d1.flavor, shape, blocks)
    }

    /// Reflection with respect to a horizontal axis: source and target rows
    /// swap. An involution; for compositions star(d1∘d2) = star(d2)∘star(d1).
    pub fn star(&self) -> Diagram {
        let a = self.source_len();
        let b = self.target_len();
        let blocks = self
            .blocks
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|&d| if d < a { b + d } else { d - a })
                    .collect()
            })
            .collect();
        let shape = Shape {
            source: self.shape.target.clone(),
            target: self.shape.source.clone(),
        };
        Diagram {
            flavor: self.flavor,
            shape,
            blocks: canonicalize(blocks),
        }
    }

    /// True iff the diagram is non-crossing in the rectangular arrangement.
    ///
    /// Dots are placed on a circle: source dots 0..a−1 left to right, then
    /// target dots in reverse; two chords cross iff they interleave.
    pub fn is_planar(&self) -> bool {
        let a = self.source_len();
        let b = self.target_len();
        let pos = |d: usize| if d < a { d } else { a + (b - 1 - (d - a)) };
        let chords: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .map(|blk| {
                let (x, y) = (pos(blk[0]), pos(blk[1]));
                (x.min(y), x.max(y))
            })
            .collect();
        for (i, &(x1, x2)) in chords.iter().enumerate() {
            for &(y1, y2) in &chords[i + 1..] {
                let inside1 = x1 < y1 && y1 < x2;
                let inside2 = x1 < y2 && y2 < x2;
                if inside1 != inside2 {
                    return false;
                }
            }
        }
        true
    }

    /// Line-class counts (propagating, cups, caps) for matching flavors.
    /// Cups are target-row-internal pairs, caps source-row-internal.
    pub fn diagram_stats(&self) -> Result<(usize, usize, usize)> {
        if !self.flavor.is_matching() {
            return Err(Error::Unsupported(
                "diagram_stats requires a matching flavor".into(),
            ));
        }
        let a = self.source_len();
        let mut propagating = 0;
        let mut cups = 0;
        let mut caps = 0;
        for b in &self.blocks {
            match (b[0] < a, b[1] < a) {
                (true, true) => caps += 1,
                (false, false) => cups += 1,
                _ => propagating += 1,
            }
        }
        Ok((propagating, cups, caps))
    }

    /// The single cup (shape (0,2)) and cap (shape (2,0)).
    pub fn cup(flavor: Flavor) -> Diagram {
        Diagram {
            flavor,
            shape: Shape::plain(0, 2),
            blocks: vec![vec![0, 1]],
        }
    }

    pub fn cap(flavor: Flavor) -> Diagram {
        Diagram {
            flavor,
            shape: Shape::plain(2, 0),
            blocks: vec![vec![0, 1]],
        }
    }

    /// The crossing s_p on n plain strands (p and p+1 interchanged).
    pub fn crossing_at(flavor: Flavor, n: usize, p: usize) -> Diagram {
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
        Diagram {
            flavor,
            shape: Shape::plain(n, n),
            blocks: canonicalize(blocks),
        }
    }

    /// The hook e_p on n strands: cap {p,p+1} over cup {p,p+1}.
    pub fn hook_at(flavor: Flavor, n: usize, p: usize) -> Diagram {
        let mut blocks = vec![vec![p, p + 1], vec![n + p, n + p + 1]];
        for i in 0..n {
            if i != p && i != p + 1 {
                blocks.push(vec![i, n + i]);
            }
        }
        Diagram {
            flavor,
            shape: Shape::plain(n, n),
            blocks: canonicalize(blocks),
        }
    }

    /// Partition-category generator: dots p, p+1 of both rows merged into one
    /// block; everything else straight.
    pub fn merge_at(n: usize, p: usize) -> Diagram {
        let mut blocks = vec![vec![p, p + 1, n + p, n + p + 1]];
        for i in 0..n {
            if i != p && i != p + 1 {
                blocks.push(vec![i, n + i]);
            }
        }
        Diagram {
            flavor: Flavor::PartitionCat,
            shape: Shape::plain(n, n),
            blocks: canonicalize(blocks),
        }
    }

    /// Partition-category generator: dot p split into singletons on both rows.
    pub fn singleton_at(n: usize, p: usize) -> Diagram {
        let mut blocks = vec![vec![p], vec![n + p]];
        for i in 0..n {
            if i != p {
                blocks.push(vec![i, n + i]);
            }
        }
        Diagram {
            flavor: Flavor::PartitionCat,
            shape: Shape::plain(n, n),
            blocks: canonicalize(blocks),
        }
    }
}

impl std::fmt::Display for Diagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:?}({},{}){:?}",
            self.flavor,
            self.source_len(),
            self.target_len(),
            self.blocks
        )
    }
}

/// The evaluation diagram ev_i of shape (2i, 0): dot p joins dot p+i.
///
/// For Temperley-Lieb only i ≤ 1 is representable (the fixed picture crosses
/// for i ≥ 2); use Brauer for the generic case.
pub fn ev_diagram(i: usize, flavor: Flavor) -> Result<Diagram> {
    if flavor == Flavor::WalledBrauer {
        return Err(Error::Unsupported(
            "use ev_colored for walled diagrams".into(),
        ));
    }
    if flavor == Flavor::TemperleyLieb && i > 1 {
        return Err(Error::Unsupported(
            "the fixed evaluation picture is non-planar for i > 1".into(),
        ));
    }
    let blocks = (0..i).map(|p| vec![p, p + i]).collect();
    Diagram::new(flavor, Shape::plain(2 * i, 0), blocks)
}

/// The coevaluation diagram co_i of shape (0, 2i): star of [`ev_diagram`].
pub fn co_diagram(i: usize, flavor: Flavor) -> Result<Diagram> {
    Ok(ev_diagram(i, flavor)?.star())
}

/// Mixed-color evaluation for the object with color sequence `seq`: source row
/// is `seq` followed by its componentwise flip, dot p joins dot p+n.
pub fn ev_colored(seq: &[Color]) -> Result<Diagram> {
    let n = seq.len();
    let mut src: Vec<Color> = seq.to_vec();
    src.extend(seq.iter().map(|c| c.flip()));
    let blocks = (0..n).map(|p| vec![p, p + n]).collect();
    Diagram::new(
        Flavor::WalledBrauer,
        Shape {
            source: Row::Colored(src),
            target: Row::Colored(vec![]),
        },
        blocks,
    )
}

/// Mixed-color coevaluation: 1 → flip(seq) ⊗ seq, the star of the evaluation
/// of the dual object.
pub fn co_colored(seq: &[Color]) -> Result<Diagram> {
    let flipped: Vec<Color> = seq.iter().map(|c| c.flip()).collect();
    Ok(ev_colored(&flipped)?.star())
}

/// Enumeration bounds (total dot counts) per connectivity kind.
pub const MAX_MATCHING_DOTS: usize = 14;
pub const MAX_PARTITION_DOTS: usize = 12;

/// Enumerates all canonical diagrams of the given flavor and shape in a
/// deterministic order.
pub fn enumerate_diagrams(flavor: Flavor, shape: &Shape) -> Result<Vec<Diagram>> {
    let n = shape.total_dots();
    if flavor.is_matching() {
        if n > MAX_MATCHING_DOTS {
            return Err(Error::BoundExceeded(format!(
                "{n} dots exceeds the matching bound {MAX_MATCHING_DOTS}"
            )));
        }
        if n % 2 != 0 {
            return Ok(vec![]);
        }
        let a = shape.source_len();
        let color = |d: usize| {
            if d < a {
                shape.source.color(d)
            } else {
                shape.target.color(d - a)
            }
        };
        let pair_ok = |x: usize, y: usize| -> bool {
            match flavor {
                Flavor::WalledBrauer => {
                    let same_row = (x < a) == (y < a);
                    if same_row {
                        color(x) != color(y)
                    } else {
                        color(x) == color(y)
                    }
                }
                _ => true,
            }
        };
        let mut out = Vec::new();
        let mut used = vec![false; n];
        let mut pairs: Vec<Vec<usize>> = Vec::new();
        fn rec(
            n: usize,
            used: &mut [bool],
            pairs: &mut Vec<Vec<usize>>,
            pair_ok: &dyn Fn(usize, usize) -> bool,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            let first = match used.iter().position(|&u| !u) {
                Some(f) => f,
                None => {
                    out.push(pairs.clone());
                    return;
                }
            };
            used[first] = true;
            for second in first + 1..n {
                if used[second] || !pair_ok(first, second) {
                    continue;
                }
                used[second] = true;
                pairs.push(vec![first, second]);
                rec(n, used, pairs, pair_ok, out);
                pairs.pop();
                used[second] = false;
            }
            used[first] = false;
        }
        let mut raw = Vec::new();
        rec(n, &mut used, &mut pairs, &pair_ok, &mut raw);
        for blocks in raw {
            match Diagram::new(flavor, shape.clone(), blocks) {
                Ok(d) => out.push(d),
                Err(_) => {} // non-planar candidates for TL
            }
        }
        Ok(out)
    } else {
        if n > MAX_PARTITION_DOTS {
            return Err(Error::BoundExceeded(format!(
                "{n} dots exceeds the partition bound {MAX_PARTITION_DOTS}"
            )));
        }
        // restricted-growth strings
        let mut out = Vec::new();
        let mut assignment = vec![0usize; n];
        fn rec(
            idx: usize,
            max_used: usize,
            assignment: &mut Vec<usize>,
            n: usize,
            out: &mut Vec<Vec<usize>>,
        ) {
            if idx == n {
                out.push(assignment.clone());
                return;
            }
            for b in 0..=max_used {
                assignment[idx] = b;
                let new_max = max_used.max(b + 1);
                rec(idx + 1, new_max, assignment, n, out);
            }
        }
        let mut raw = Vec::new();
        if n == 0 {
            raw.push(vec![]);
        } else {
            rec(0, 0, &mut assignment, n, &mut raw);
        }
        for assignment in raw {
            let nb = assignment.iter().copied().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); nb];
            for (d, &b) in assignment.iter().enumerate() {
                blocks[b].push(d);
            }
            out.push(Diagram::new(flavor, shape.clone(), blocks)?);
        }
        Ok(out)
    }
}

/// An elementary generator in a slice word, acting on a row of tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SliceGen {
    /// Adjacent crossing of positions p and p+1.
    Crossing(usize),
    /// Cap closing positions p and p+1.
    Cap(usize),
    /// Cup inserting two new strands at position p; walled cups carry the
    /// colors of the created strands.
    Cup {
        pos: usize,
        colors: Option<(Color, Color)>,
    },
}

/// The row obtained by applying a generator to `row`.
pub fn apply_gen_to_row(row: &Row, gen: &SliceGen) -> Result<Row> {
    match gen {
        SliceGen::Crossing(p) => {
            if p + 1 >= row.len() {
                return Err(Error::InvalidParameter("crossing out of range".into()));
            }
            Ok(match row {
                Row::Plain(n) => Row::Plain(*n),
                Row::Colored(v) => {
                    let mut v = v.clone();
                    v.swap(*p, *p + 1);
                    Row::Colored(v)
                }
            })
        }
        SliceGen::Cap(p) => {
            if p + 1 >= row.len() {
                return Err(Error::InvalidParameter("cap out of range".into()));
            }
            Ok(match row {
                Row::Plain(n) => Row::Plain(n - 2),
                Row::Colored(v) => {
                    let mut v = v.clone();
                    v.drain(*p..*p + 2);
                    Row::Colored(v)
                }
            })
        }
        SliceGen::Cup { pos, colors } => {
            if *pos > row.len() {
                return Err(Error::InvalidParameter("cup out of range".into()));
            }
            Ok(match row {
                Row::Plain(n) => Row::Plain(n + 2),
                Row::Colored(v) => {
                    let (c1, c2) = colors.ok_or_else(|| {
                        Error::InvalidParameter("walled cup requires colors".into())
                    })?;
                    let mut v = v.clone();
                    v.insert(*pos, c2);
                    v.insert(*pos, c1);
                    Row::Colored(v)
                }
            })
        }
    }
}

/// The elementary diagram realizing a generator on source row `row`.
pub fn elementary_diagram(flavor: Flavor, row: &Row, gen: &SliceGen) -> Result<Diagram> {
    let target = apply_gen_to_row(row, gen)?;
    let n = row.len();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    match gen {
        SliceGen::Crossing(p) => {
            for i in 0..n {
                let t = if i == *p {
                    p + 1
                } else if i == *p + 1 {
                    *p
                } else {
                    i
                };
                blocks.push(vec![i, n + t]);
            }
        }
        SliceGen::Cap(p) => {
            blocks.push(vec![*p, *p + 1]);
            for i in 0..n {
                if i == *p || i == *p + 1 {
                    continue;
                }
                let t = if i < *p { i } else { i - 2 };
                blocks.push(vec![i, n + t]);
            }
        }
        SliceGen::Cup { pos, .. } => {
            blocks.push(vec![n + pos, n + pos + 1]);
            for i in 0..n {
                let t = if i < *pos { i } else { i + 2 };
                blocks.push(vec![i, n + t]);
            }
        }
    }
    Diagram::new(
        flavor,
        Shape {
            source: row.clone(),
            target,
        },
        blocks,
    )
}

/// Deterministic factorization of a matching diagram into elementary
/// crossings, single cups and single caps. The word is listed in application
/// order: `d = g_k ∘ … ∘ g_1` with `g_1` acting on the source row first;
/// sign-free recomposition reproduces `d` with zero loops.
pub fn slice_decomposition(d: &Diagram) -> Result<Vec<SliceGen>> {
    if !d.flavor().is_matching() {
        return Err(Error::Unsupported(
            "slice decomposition requires a matching flavor".into(),
        ));
    }
    let a = d.source_len();
    let mut word: Vec<SliceGen> = Vec::new();
    // tokens: Some(source dot) for strands entered from the source row,
    // destination-target-dot for cup halves
    #[derive(Clone, Copy, PartialEq)]
    enum Token {
        Source(usize),
        CupHalf(usize), // destination target index (0-based within target row)
    }
    let mut row: Vec<Token> = (0..a).map(Token::Source).collect();
    // Phase 1: caps — source-internal pairs, smallest first dot first.
    let mut cap_pairs: Vec<(usize, usize)> = Vec::new();
    let mut cup_pairs: Vec<(usize, usize)> = Vec::new();
    for b in d.blocks() {
        let (x, y) = (b[0], b[1]);
        if x < a && y < a {
            cap_pairs.push((x, y));
        } else if x >= a && y >= a {
            cup_pairs.push((x - a, y - a));
        }
    }
    cap_pairs.sort();
    cup_pairs.sort();
    for (i, j) in cap_pairs {
        let pi = row.iter().position(|&t| t == Token::Source(i)).unwrap();
        let pj = row.iter().position(|&t| t == Token::Source(j)).unwrap();
        let (lo, hi) = (pi.min(pj), pi.max(pj));
        // bring the token at `hi` adjacent to the one at `lo`
        for q in (lo + 1..hi).rev() {
            word.push(SliceGen::Crossing(q));
            row.swap(q, q + 1);
        }
        word.push(SliceGen::Cap(lo));
        row.drain(lo..lo + 2);
    }
    // Phase 2: cups appended at the right end, destinations recorded.
    for (u, v) in cup_pairs {
        let colors = match &d.shape().target {
            Row::Colored(cols) => Some((cols[u], cols[v])),
            Row::Plain(_) => None,
        };
        word.push(SliceGen::Cup {
            pos: row.len(),
            colors,
        });
        row.push(Token::CupHalf(u));
        row.push(Token::CupHalf(v));
    }
    // Phase 3: bubble-sort strands into target order by adjacent crossings.
    let dest = |t: &Token| -> usize {
        match t {
            Token::Source(i) => d.partner(*i) - a,
            Token::CupHalf(u) => *u,
        }
    };
    loop {
        let mut swapped = false;
        for q in 0..row.len().saturating_sub(1) {
            if dest(&row[q]) > dest(&row[q + 1]) {
                word.push(SliceGen::Crossing(q));
                row.swap(q, q + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    Ok(word)
}

/// Recomposes a slice word from a source row, returning the resulting diagram
/// and total loop count (0 for words produced by [`slice_decomposition`]).
pub fn recompose(flavor: Flavor, source: &Row, word: &[SliceGen]) -> Result<(Diagram, usize)> {
    let mut current = Diagram::identity(flavor, source.clone());
    let mut loops = 0;
    for gen in word {
        let g = elementary_diagram(flavor, &current.shape().target, gen)?;
        let (next, l) = Diagram::compose(&g, &current)?;
        loops += l;
        current = next;
    }
    Ok((current, loops))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}

// ---------------------------------------------------------------------------
// JSON interface
// ---------------------------------------------------------------------------

/// External JSON form: `{"flavor": "...", "source": a, "target": b,
/// "pairs"/"blocks": [[...]]}`. Walled rows are arrays of signed indices
/// (+1 black, −1 white).
#[derive(Serialize, Deserialize)]
struct DiagramJson {
    flavor: Flavor,
    source: RowJson,
    target: RowJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RowJson {
    Plain(usize),
    Colored(Vec<i8>),
}

impl From<&Row> for RowJson {
    fn from(r: &Row) -> RowJson {
        match r {
            Row::Plain(n) => RowJson::Plain(*n),
            Row::Colored(v) => RowJson::Colored(
                v.iter()
                    .map(|c| match c {
                        Color::Black => 1,
                        Color::White => -1,
                    })
                    .collect(),
            ),
        }
    }
}

impl TryFrom<RowJson> for Row {
    type Error = Error;
    fn try_from(r: RowJson) -> Result<Row> {
        match r {
            RowJson::Plain(n) => Ok(Row::Plain(n)),
            RowJson::Colored(v) => {
                let colors = v
                    .into_iter()
                    .map(|s| match s {
                        1 => Ok(Color::Black),
                        -1 => Ok(Color::White),
                        other => Err(Error::InvalidParameter(format!(
                            "color index must be ±1, got {other}"
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Row::Colored(colors))
            }
        }
    }
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct ShapeJson {
            source: RowJson,
            target: RowJson,
        }
        ShapeJson {
            source: (&self.source).into(),
            target: (&self.target).into(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct ShapeJson {
            source: RowJson,
            target: RowJson,
        }
        let raw = ShapeJson::deserialize(d)?;
        Ok(Shape {
            source: raw.source.try_into().map_err(serde::de::Error::custom)?,
            target: raw.target.try_into().map_err(serde::de::Error::custom)?,
        })
    }
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (pairs, blocks) = if self.flavor.is_matching() {
            (Some(self.blocks.clone()), None)
        } else {
            (None, Some(self.blocks.clone()))
        };
        DiagramJson {
            flavor: self.flavor,
            source: (&self.shape.source).into(),
            target: (&self.shape.target).into(),
            pairs,
            blocks,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        let blocks = raw
            .pairs
            .or(raw.blocks)
            .ok_or_else(|| serde::de::Error::custom("missing pairs/blocks"))?;
        let shape = Shape {
            source: raw.source.try_into().map_err(serde::de::Error::custom)?,
            target: raw.target.try_into().map_err(serde::de::Error::custom)?,
        };
        Diagram::new(raw.flavor, shape, blocks).map_err(serde::de::Error::custom)
    }
}
