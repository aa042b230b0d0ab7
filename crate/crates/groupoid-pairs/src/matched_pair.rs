//! Matched pairs of groupoids and their cells.
//!
//! A matched pair `(V, H)` is a vertical groupoid `V` (source `t`, end `b`)
//! and a horizontal groupoid `H` (source `l`, end `r`) over a common base,
//! with a left action `▷ : H ×_{r,t} V → V` of `H` on `t` and a right action
//! `◁ : H ×_{r,t} V → H` of `V` on `r`, compatible in the sense that every
//! composable pair `(x, g)` closes up into a square
//!
//! ```text
//!        l(x) ──x──▶ r(x)=t(g)
//!         │              │
//!       x▷g              g
//!         ▼              ▼
//!        l(x◁g) ─x◁g─▶ b(g)
//! ```
//!
//! called a *cell*. Cells compose horizontally and vertically, invert, and
//! transpose into cells of the dual pair; they are also the linear basis of
//! the weak Hopf algebra built in [`crate::hopf`].
//!
//! Action tables are total arrays over the composable-pair index, computed
//! once at construction; all downstream formulas are pure table walks.

use crate::error::{Error, Result};
use crate::groupoid::{same_base, zoo, ArrowId, FiniteGroupoid, ObjId};
use crate::report::ValidationReport;

/// A composable pair `(x, g)` with `r(x) = t(g)`: `top` is the horizontal
/// arrow `x`, `right` the vertical arrow `g`. The derived edges `x ▷ g`
/// (left) and `x ◁ g` (bottom) are read off the owning [`MatchedPair`].
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cell {
    pub top: ArrowId,
    pub right: ArrowId,
}

#[derive(Clone, Debug)]
pub struct MatchedPair {
    vertical: FiniteGroupoid,
    horizontal: FiniteGroupoid,
    cells: Vec<Cell>,
    /// `top.idx() * |V| + right.idx()` → cell index.
    cell_lookup: Vec<Option<usize>>,
    /// Per cell: `x ▷ g ∈ V`.
    left: Vec<ArrowId>,
    /// Per cell: `x ◁ g ∈ H`.
    bottom: Vec<ArrowId>,
}

/// Table equality; labels do not participate.
impl PartialEq for MatchedPair {
    fn eq(&self, other: &Self) -> bool {
        self.vertical == other.vertical
            && self.horizontal == other.horizontal
            && self.left == other.left
            && self.bottom == other.bottom
    }
}
impl Eq for MatchedPair {}

impl MatchedPair {
    /// Assemble a pair from groupoids and an action rule evaluated on every
    /// composable `(x, g)`. The rule's outputs are stored verbatim; no law
    /// is checked beyond the shared base. Pair with [`MatchedPair::validate`].
    pub fn from_actions(
        vertical: FiniteGroupoid,
        horizontal: FiniteGroupoid,
        act: impl Fn(ArrowId, ArrowId) -> (ArrowId, ArrowId),
    ) -> Result<Self> {
        if !same_base(&vertical, &horizontal) {
            return Err(Error::BaseMismatch(format!(
                "vertical base {} vs horizontal base {}",
                vertical.object_count(),
                horizontal.object_count()
            )));
        }
        let nv = vertical.arrow_count();
        let mut cells = Vec::new();
        let mut cell_lookup = vec![None; horizontal.arrow_count() * nv];
        let mut left = Vec::new();
        let mut bottom = Vec::new();
        for x in horizontal.arrows() {
            for g in vertical.arrows() {
                if horizontal.end(x) == vertical.src(g) {
                    cell_lookup[x.idx() * nv + g.idx()] = Some(cells.len());
                    cells.push(Cell { top: x, right: g });
                    let (l, b) = act(x, g);
                    left.push(l);
                    bottom.push(b);
                }
            }
        }
        Ok(MatchedPair {
            vertical,
            horizontal,
            cells,
            cell_lookup,
            left,
            bottom,
        })
    }

    pub fn vertical(&self) -> &FiniteGroupoid {
        &self.vertical
    }

    pub fn horizontal(&self) -> &FiniteGroupoid {
        &self.horizontal
    }

    pub fn base_size(&self) -> usize {
        self.vertical.object_count()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_index(&self, c: Cell) -> Option<usize> {
        self.cell_lookup[c.top.idx() * self.vertical.arrow_count() + c.right.idx()]
    }

    pub fn cell_at(&self, i: usize) -> Cell {
        self.cells[i]
    }

    /// `x ▷ g`, defined when `r(x) = t(g)`.
    pub fn act_left(&self, x: ArrowId, g: ArrowId) -> Option<ArrowId> {
        self.cell_lookup[x.idx() * self.vertical.arrow_count() + g.idx()].map(|i| self.left[i])
    }

    /// `x ◁ g`, defined when `r(x) = t(g)`.
    pub fn act_right(&self, x: ArrowId, g: ArrowId) -> Option<ArrowId> {
        self.cell_lookup[x.idx() * self.vertical.arrow_count() + g.idx()].map(|i| self.bottom[i])
    }

    /// Left edge `x ▷ g` of a cell.
    pub fn cell_left(&self, c: Cell) -> ArrowId {
        self.left[self.cell_index(c).expect("cell of this pair")]
    }

    /// Bottom edge `x ◁ g` of a cell.
    pub fn cell_bottom(&self, c: Cell) -> ArrowId {
        self.bottom[self.cell_index(c).expect("cell of this pair")]
    }

    /// Horizontal unit `I_H(g) = (id_H t(g), g)`.
    pub fn unit_cell_h(&self, g: ArrowId) -> Cell {
        Cell {
            top: self.horizontal.id(self.vertical.src(g)),
            right: g,
        }
    }

    /// Vertical unit `I_V(x) = (x, id_V r(x))`.
    pub fn unit_cell_v(&self, x: ArrowId) -> Cell {
        Cell {
            top: x,
            right: self.vertical.id(self.horizontal.end(x)),
        }
    }

    /// Horizontal composition: `(x, g)·(y, f)` is defined iff `g = y ▷ f`
    /// and equals `(xy, f)`.
    pub fn horizontal_compose(&self, a: Cell, b: Cell) -> Option<Cell> {
        if self.act_left(b.top, b.right)? != a.right {
            return None;
        }
        let top = self.horizontal.compose(a.top, b.top)?;
        Some(Cell {
            top,
            right: b.right,
        })
    }

    /// Vertical composition: `(x, g₁)·(x ◁ g₁, g₂) = (x, g₁g₂)`.
    pub fn vertical_compose(&self, a: Cell, b: Cell) -> Option<Cell> {
        if self.act_right(a.top, a.right)? != b.top {
            return None;
        }
        let right = self.vertical.compose(a.right, b.right)?;
        Some(Cell { top: a.top, right })
    }

    /// The inverse cell `((x ◁ g)⁻¹, (x ▷ g)⁻¹)`, obtained by inverting all
    /// four edges of the square.
    pub fn cell_inverse(&self, c: Cell) -> Cell {
        Cell {
            top: self.horizontal.inv(self.cell_bottom(c)),
            right: self.vertical.inv(self.cell_left(c)),
        }
    }

    /// Transpose `(x, g) ↦ (x ▷ g, x ◁ g)`: a cell of [`MatchedPair::dual`].
    pub fn cell_transpose(&self, c: Cell) -> Cell {
        Cell {
            top: self.cell_left(c),
            right: self.cell_bottom(c),
        }
    }

    /// Invert the horizontal edges: `(x, g) ↦ (x⁻¹, g)`, a cell of
    /// [`MatchedPair::opposite`].
    pub fn cell_to_opposite(&self, c: Cell) -> Cell {
        Cell {
            top: self.horizontal.inv(c.top),
            right: c.right,
        }
    }

    /// Invert the vertical edges: `(x, g) ↦ (x, g⁻¹)`, a cell of
    /// [`MatchedPair::coopposite`].
    pub fn cell_to_coopposite(&self, c: Cell) -> Cell {
        Cell {
            top: c.top,
            right: self.vertical.inv(c.right),
        }
    }

    pub fn describe_cell(&self, c: Cell) -> String {
        format!(
            "({}, {})",
            self.horizontal.label(c.top),
            self.vertical.label(c.right)
        )
    }

    /// Exhaustively check both groupoids, the shared base, totality of the
    /// action tables, both action laws, the compatibility `b(x▷g) = l(x◁g)`
    /// and the multiplicativity axioms.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("matched-pair");
        report.absorb(self.vertical.validate());
        report.absorb(self.horizontal.validate());
        if !report.is_ok() {
            return report;
        }
        if !same_base(&self.vertical, &self.horizontal) {
            report.record("shared-base", "vertical and horizontal bases differ");
            return report;
        }
        let v = &self.vertical;
        let h = &self.horizontal;

        // Totality and ranges.
        for &c in &self.cells {
            let i = self.cell_index(c).unwrap();
            if self.left[i].idx() >= v.arrow_count() || self.bottom[i].idx() >= h.arrow_count() {
                report.record("action-range", self.describe_cell(c));
                return report;
            }
        }

        for &c in &self.cells {
            let (x, g) = (c.top, c.right);
            let xg_l = self.cell_left(c);
            let xg_b = self.cell_bottom(c);
            // t(x▷g) = l(x)
            if v.src(xg_l) != h.src(x) {
                report.record("left-action-endpoint", self.describe_cell(c));
            }
            // r(x◁g) = b(g)
            if h.end(xg_b) != v.end(g) {
                report.record("right-action-endpoint", self.describe_cell(c));
            }
            // b(x▷g) = l(x◁g)
            if v.end(xg_l) != h.src(xg_b) {
                report.record("corner-compat", self.describe_cell(c));
            }
        }

        // id_H(t(g)) ▷ g = g  and  x ◁ id_V(r(x)) = x.
        for g in v.arrows() {
            let e = h.id(v.src(g));
            if self.act_left(e, g) != Some(g) {
                report.record("left-action-unit", v.label(g).to_string());
            }
        }
        for x in h.arrows() {
            let e = v.id(h.end(x));
            if self.act_right(x, e) != Some(x) {
                report.record("right-action-unit", h.label(x).to_string());
            }
        }

        // x ▷ (y ▷ g) = xy ▷ g  and  (x ◁ f) ◁ g = x ◁ fg.
        for x in h.arrows() {
            for y in h.arrows() {
                let Some(xy) = h.compose(x, y) else { continue };
                for g in v.arrows() {
                    if v.src(g) != h.end(y) {
                        continue;
                    }
                    let lhs = self.act_left(y, g).and_then(|yg| self.act_left(x, yg));
                    if lhs != self.act_left(xy, g) || lhs.is_none() {
                        report.record(
                            "left-action-mult",
                            format!("({}, {}, {})", h.label(x), h.label(y), v.label(g)),
                        );
                    }
                }
            }
        }
        for f in v.arrows() {
            for g in v.arrows() {
                let Some(fg) = v.compose(f, g) else { continue };
                for x in h.arrows() {
                    if h.end(x) != v.src(f) {
                        continue;
                    }
                    let lhs = self.act_right(x, f).and_then(|xf| self.act_right(xf, g));
                    if lhs != self.act_right(x, fg) || lhs.is_none() {
                        report.record(
                            "right-action-mult",
                            format!("({}, {}, {})", h.label(x), v.label(f), v.label(g)),
                        );
                    }
                }
            }
        }

        // x ▷ fg = (x ▷ f)((x ◁ f) ▷ g).
        for x in h.arrows() {
            for f in v.arrows() {
                if h.end(x) != v.src(f) {
                    continue;
                }
                for g in v.arrows() {
                    let Some(fg) = v.compose(f, g) else { continue };
                    let lhs = self.act_left(x, fg);
                    let rhs = (|| {
                        let xf = self.act_left(x, f)?;
                        let xqf = self.act_right(x, f)?;
                        let second = self.act_left(xqf, g)?;
                        v.compose(xf, second)
                    })();
                    if lhs != rhs || lhs.is_none() {
                        report.record(
                            "product-compat-left",
                            format!("({}, {}, {})", h.label(x), v.label(f), v.label(g)),
                        );
                    }
                }
            }
        }

        // xy ◁ g = (x ◁ (y ▷ g))(y ◁ g).
        for x in h.arrows() {
            for y in h.arrows() {
                let Some(xy) = h.compose(x, y) else { continue };
                for g in v.arrows() {
                    if v.src(g) != h.end(y) {
                        continue;
                    }
                    let lhs = self.act_right(xy, g);
                    let rhs = (|| {
                        let yg = self.act_left(y, g)?;
                        let first = self.act_right(x, yg)?;
                        let second = self.act_right(y, g)?;
                        h.compose(first, second)
                    })();
                    if lhs != rhs || lhs.is_none() {
                        report.record(
                            "product-compat-right",
                            format!("({}, {}, {})", h.label(x), h.label(y), v.label(g)),
                        );
                    }
                }
            }
        }

        report
    }

    /// The eight identities that follow from the axioms, each verified over
    /// every legal argument tuple. A failure here on a pair that passes
    /// [`MatchedPair::validate`] indicates a table-construction bug.
    pub fn derived_identities(&self) -> ValidationReport {
        let mut report = ValidationReport::new("derived-identities");
        let v = &self.vertical;
        let h = &self.horizontal;

        // x ▷ id_V(r(x)) = id_V(l(x))
        for x in h.arrows() {
            if self.act_left(x, v.id(h.end(x))) != Some(v.id(h.src(x))) {
                report.record("unit-transport-left", h.label(x).to_string());
            }
        }
        // id_H(t(g)) ◁ g = id_H(b(g))
        for g in v.arrows() {
            if self.act_right(h.id(v.src(g)), g) != Some(h.id(v.end(g))) {
                report.record("unit-transport-right", v.label(g).to_string());
            }
        }
        for &c in &self.cells {
            let (x, g) = (c.top, c.right);
            let xl = self.cell_left(c); // x ▷ g
            let xb = self.cell_bottom(c); // x ◁ g
                                          // (x▷g)⁻¹ = (x◁g) ▷ g⁻¹
            if self.act_left(xb, v.inv(g)) != Some(v.inv(xl)) {
                report.record("inverse-left", self.describe_cell(c));
            }
            // (x◁g)⁻¹ = x⁻¹ ◁ (x▷g)
            if self.act_right(h.inv(x), xl) != Some(h.inv(xb)) {
                report.record("inverse-right", self.describe_cell(c));
            }
            // (x◁g)⁻¹ ▷ (x▷g)⁻¹ = g⁻¹
            if self.act_left(h.inv(xb), v.inv(xl)) != Some(v.inv(g)) {
                report.record("inverse-cell-left", self.describe_cell(c));
            }
            // (x◁g)⁻¹ ◁ (x▷g)⁻¹ = x⁻¹
            if self.act_right(h.inv(xb), v.inv(xl)) != Some(h.inv(x)) {
                report.record("inverse-cell-right", self.describe_cell(c));
            }
            // g⁻¹ (x⁻¹ ▷ f) = (x◁g)⁻¹ ▷ ((x▷g)⁻¹ f)   for f with t(f) = l(x)
            for f in v.arrows() {
                if v.src(f) != h.src(x) {
                    continue;
                }
                let lhs = self
                    .act_left(h.inv(x), f)
                    .and_then(|t| v.compose(v.inv(g), t));
                let rhs = v
                    .compose(v.inv(xl), f)
                    .and_then(|t| self.act_left(h.inv(xb), t));
                if lhs != rhs || lhs.is_none() {
                    report.record(
                        "shuffle-left",
                        format!("({}, {}, {})", h.label(x), v.label(g), v.label(f)),
                    );
                }
            }
            // (y ◁ g⁻¹) x⁻¹ = (y (x◁g)⁻¹) ◁ (x▷g)⁻¹   for y with r(y) = b(g)
            for y in h.arrows() {
                if h.end(y) != v.end(g) {
                    continue;
                }
                let lhs = self
                    .act_right(y, v.inv(g))
                    .and_then(|t| h.compose(t, h.inv(x)));
                let rhs = h
                    .compose(y, h.inv(xb))
                    .and_then(|t| self.act_right(t, v.inv(xl)));
                if lhs != rhs || lhs.is_none() {
                    report.record(
                        "shuffle-right",
                        format!("({}, {}, {})", h.label(x), v.label(g), h.label(y)),
                    );
                }
            }
        }
        report
    }

    /// The dual (transpose) pair `(H, V)` with actions
    /// `f ⇀ y = (y⁻¹ ◁ f⁻¹)⁻¹` and `f ↼ y = (y⁻¹ ▷ f⁻¹)⁻¹`.
    /// Transposing each cell of `self` yields a cell of the dual.
    pub fn dual(&self) -> MatchedPair {
        let v = self.vertical.clone();
        let h = self.horizontal.clone();
        MatchedPair::from_actions(h.clone(), v.clone(), |f, y| {
            // Here f ∈ V is horizontal and y ∈ H is vertical, with b(f) = l(y).
            let yi = h.inv(y);
            let fi = v.inv(f);
            let new_left = h.inv(self.act_right(yi, fi).expect("composable by construction"));
            let new_bottom = v.inv(self.act_left(yi, fi).expect("composable by construction"));
            (new_left, new_bottom)
        })
        .expect("dual shares the base")
    }

    /// The opposite pair `(V, H^{op})` with actions `y ▷' g = y⁻¹ ▷ g` and
    /// `y ◁' g = (y⁻¹ ◁ g)⁻¹`. Inverting the horizontal edges of a cell of
    /// `self` yields a cell of the opposite.
    pub fn opposite(&self) -> MatchedPair {
        let v = self.vertical.clone();
        let hop = self.horizontal.opposite();
        let h = self.horizontal.clone();
        MatchedPair::from_actions(v.clone(), hop, |y, g| {
            let yi = h.inv(y);
            let new_left = self.act_left(yi, g).expect("composable by construction");
            let new_bottom = h.inv(self.act_right(yi, g).expect("composable by construction"));
            (new_left, new_bottom)
        })
        .expect("opposite shares the base")
    }

    /// The coopposite pair `(V^{op}, H)` with actions `x ▷' h = (x ▷ h⁻¹)⁻¹`
    /// and `x ◁' h = x ◁ h⁻¹`. Inverting the vertical edges of a cell of
    /// `self` yields a cell of the coopposite.
    pub fn coopposite(&self) -> MatchedPair {
        let vop = self.vertical.opposite();
        let v = self.vertical.clone();
        let h = self.horizontal.clone();
        MatchedPair::from_actions(vop, h, |x, hh| {
            let hi = v.inv(hh);
            let new_left = v.inv(self.act_left(x, hi).expect("composable by construction"));
            let new_bottom = self.act_right(x, hi).expect("composable by construction");
            (new_left, new_bottom)
        })
        .expect("coopposite shares the base")
    }

    /// The initial pair `(P×P, P)`: coarse vertical, discrete horizontal,
    /// `P ▷ (P,Q) = (P,Q)` and `P ◁ (P,Q) = id_Q`.
    pub fn initial(n: usize) -> Result<MatchedPair> {
        let labels = zoo::base_labels(n);
        MatchedPair::initial_over(&labels)
    }

    /// The initial pair over a named base.
    pub fn initial_over(labels: &[String]) -> Result<MatchedPair> {
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let v = FiniteGroupoid::coarse(&refs)?;
        let h = FiniteGroupoid::discrete(&refs)?;
        let hh = h.clone();
        let vv = v.clone();
        MatchedPair::from_actions(v, h, move |_x, g| (g, hh.id(vv.end(g))))
    }

    /// The terminal pair `(P, P×P)`: discrete vertical, coarse horizontal,
    /// `(P,Q) ▷ id_Q = id_P` and `(P,Q) ◁ id_Q = (P,Q)`.
    pub fn terminal(n: usize) -> Result<MatchedPair> {
        let labels = zoo::base_labels(n);
        MatchedPair::terminal_over(&labels)
    }

    /// The terminal pair over a named base.
    pub fn terminal_over(labels: &[String]) -> Result<MatchedPair> {
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let v = FiniteGroupoid::discrete(&refs)?;
        let h = FiniteGroupoid::coarse(&refs)?;
        let hh = h.clone();
        let vv = v.clone();
        MatchedPair::from_actions(v, h, move |x, _g| (vv.id(hh.src(x)), x))
    }

    /// The pair `M(X, Y)` on the base `X × Y` with horizontal arrows
    /// `X × X × Y`, vertical arrows `X × Y × Y`, cell structure
    /// `(x,x',y) ▷ (x',y,y') = (x,y,y')` and `(x,x',y) ◁ (x',y,y') = (x,x',y')`.
    /// `M({*}, Y)` is the initial pair and `M(X, {*})` the terminal pair;
    /// the dual of `M(X,Y)` is `M(Y,X)`.
    pub fn mxy(nx: usize, ny: usize) -> Result<MatchedPair> {
        if nx == 0 || ny == 0 {
            return Err(Error::EmptyObjectSet);
        }
        let obj = |x: usize, y: usize| ObjId((x * ny + y) as u32);
        let object_labels: Vec<String> = (0..nx)
            .flat_map(|x| (0..ny).map(move |y| format!("(x{x},y{y})")))
            .collect();

        // Horizontal: (x, x', y), l = (x,y), r = (x',y).
        let h_id = |x: usize, x2: usize, y: usize| ArrowId(((x * nx + x2) * ny + y) as u32);
        let nh = nx * nx * ny;
        let mut h_comp = vec![None; nh * nh];
        let mut h_src = Vec::with_capacity(nh);
        let mut h_end = Vec::with_capacity(nh);
        let mut h_inv = Vec::with_capacity(nh);
        let mut h_labels = Vec::with_capacity(nh);
        for x in 0..nx {
            for x2 in 0..nx {
                for y in 0..ny {
                    h_src.push(obj(x, y));
                    h_end.push(obj(x2, y));
                    h_inv.push(h_id(x2, x, y));
                    h_labels.push(format!("(x{x},x{x2},y{y})"));
                    for x3 in 0..nx {
                        h_comp[h_id(x, x2, y).idx() * nh + h_id(x2, x3, y).idx()] =
                            Some(h_id(x, x3, y));
                    }
                }
            }
        }
        let h = FiniteGroupoid::from_parts(
            object_labels.clone(),
            h_labels,
            h_src,
            h_end,
            h_comp,
            (0..nx)
                .flat_map(|x| (0..ny).map(move |y| h_id(x, x, y)))
                .collect(),
            h_inv,
        );

        // Vertical: (x, y, y'), t = (x,y), b = (x,y').
        let v_id = |x: usize, y: usize, y2: usize| ArrowId(((x * ny + y) * ny + y2) as u32);
        let nvn = nx * ny * ny;
        let mut v_comp = vec![None; nvn * nvn];
        let mut v_src = Vec::with_capacity(nvn);
        let mut v_end = Vec::with_capacity(nvn);
        let mut v_inv = Vec::with_capacity(nvn);
        let mut v_labels = Vec::with_capacity(nvn);
        for x in 0..nx {
            for y in 0..ny {
                for y2 in 0..ny {
                    v_src.push(obj(x, y));
                    v_end.push(obj(x, y2));
                    v_inv.push(v_id(x, y2, y));
                    v_labels.push(format!("(x{x},y{y},y{y2})"));
                    for y3 in 0..ny {
                        v_comp[v_id(x, y, y2).idx() * nvn + v_id(x, y2, y3).idx()] =
                            Some(v_id(x, y, y3));
                    }
                }
            }
        }
        let v = FiniteGroupoid::from_parts(
            object_labels,
            v_labels,
            v_src,
            v_end,
            v_comp,
            (0..nx)
                .flat_map(|x| (0..ny).map(move |y| v_id(x, y, y)))
                .collect(),
            v_inv,
        );

        MatchedPair::from_actions(v, h, move |xa, ga| {
            // xa = (x, x', y), ga = (x', y, y') with matching middle.
            let xi = xa.idx();
            let y = xi % ny;
            let x2 = (xi / ny) % nx;
            let x = xi / (ny * nx);
            let gi = ga.idx();
            let y2 = gi % ny;
            debug_assert_eq!((gi / ny) % ny, y);
            debug_assert_eq!(gi / (ny * ny), x2);
            let _ = x2;
            (v_id(x, y, y2), h_id(x, x2, y2))
        })
    }

    /// The semi pair `(V, P)`: discrete horizontal, `id_{t(f)} ▷ f = f`,
    /// `id_{t(f)} ◁ f = id_{b(f)}`.
    pub fn semi_vertical(v: &FiniteGroupoid) -> MatchedPair {
        let labels: Vec<&str> = v.object_labels().iter().map(|s| s.as_str()).collect();
        let h = FiniteGroupoid::discrete(&labels).expect("base is nonempty");
        let hh = h.clone();
        let vv = v.clone();
        MatchedPair::from_actions(v.clone(), h, move |_x, g| (g, hh.id(vv.end(g))))
            .expect("same base by construction")
    }

    /// The semi pair `(P, H)`: discrete vertical, `x ▷ id_{r(x)} = id_{l(x)}`,
    /// `x ◁ id_{r(x)} = x`.
    pub fn semi_horizontal(h: &FiniteGroupoid) -> MatchedPair {
        let labels: Vec<&str> = h.object_labels().iter().map(|s| s.as_str()).collect();
        let v = FiniteGroupoid::discrete(&labels).expect("base is nonempty");
        let vv = v.clone();
        let hh = h.clone();
        MatchedPair::from_actions(v, h.clone(), move |x, _g| (vv.id(hh.src(x)), x))
            .expect("same base by construction")
    }

    /// The pair `(V, N)` from a right action of the groupoid `V` on a group
    /// bundle `N` by bundle automorphisms, with the trivial left action
    /// `n ▷ g = g`. The action must satisfy the action laws and
    /// `nm ◁ g = (n ◁ g)(m ◁ g)`; violations are rejected with a witness.
    pub fn bundle_action_right(
        v: &FiniteGroupoid,
        n: &FiniteGroupoid,
        act: impl Fn(ArrowId, ArrowId) -> ArrowId,
    ) -> Result<MatchedPair> {
        if !n.is_group_bundle() {
            let bad = n.arrows().find(|&a| n.src(a) != n.end(a)).unwrap();
            return Err(Error::NotGroupBundle(n.label(bad).to_string()));
        }
        if !same_base(v, n) {
            return Err(Error::BaseMismatch("bundle action".into()));
        }
        check_right_bundle_action(v, n, &act)?;
        MatchedPair::from_actions(v.clone(), n.clone(), move |x, g| (g, act(x, g)))
    }

    /// The pair `(N, H)` from a left action of the groupoid `H` on a group
    /// bundle `N` by bundle automorphisms, with the trivial right action
    /// `x ◁ n = x`.
    pub fn bundle_action_left(
        n: &FiniteGroupoid,
        h: &FiniteGroupoid,
        act: impl Fn(ArrowId, ArrowId) -> ArrowId,
    ) -> Result<MatchedPair> {
        if !n.is_group_bundle() {
            let bad = n.arrows().find(|&a| n.src(a) != n.end(a)).unwrap();
            return Err(Error::NotGroupBundle(n.label(bad).to_string()));
        }
        if !same_base(n, h) {
            return Err(Error::BaseMismatch("bundle action".into()));
        }
        check_left_bundle_action(n, h, &act)?;
        MatchedPair::from_actions(n.clone(), h.clone(), move |x, g| (act(x, g), x))
    }

    /// The conjugation pair `(⊔_P H(P,P), H)`: `H` acts on its own isotropy
    /// bundle by `x ▷ n = x n x⁻¹`.
    pub fn conjugation(h: &FiniteGroupoid) -> MatchedPair {
        let (bundle, embed) = h.isotropy_bundle();
        let mut back = vec![None; h.arrow_count()];
        for (i, &a) in embed.iter().enumerate() {
            back[a.idx()] = Some(ArrowId(i as u32));
        }
        let hh = h.clone();
        MatchedPair::bundle_action_left(&bundle, h, move |x, nn| {
            let amb = embed[nn.idx()];
            let conj = hh
                .compose_chain(&[x, amb, hh.inv(x)])
                .expect("conjugation is defined on the isotropy fiber");
            back[conj.idx()].expect("conjugation preserves the isotropy bundle")
        })
        .expect("conjugation is an action by automorphisms")
    }

    /// One-object matched pair from an exact factorization `Σ = F · G` of a
    /// group: `V = F`, `H = G`, and `x g = (x ▷ g)(x ◁ g)` is the unique
    /// decomposition. Fails with a witness if some element has no or several
    /// decompositions.
    pub fn group_pair(
        sigma: &FiniteGroupoid,
        f_arrows: &[ArrowId],
        g_arrows: &[ArrowId],
    ) -> Result<MatchedPair> {
        let (fv, f_embed) = sigma.wide_subgroupoid(f_arrows)?;
        let (gh, g_embed) = sigma.wide_subgroupoid(g_arrows)?;
        // Unique decomposition table σ ↦ (f, y) by brute force count.
        let mut decomp: Vec<Option<(ArrowId, ArrowId)>> = vec![None; sigma.arrow_count()];
        for (i, &fa) in f_embed.iter().enumerate() {
            for (j, &ga) in g_embed.iter().enumerate() {
                if let Some(p) = sigma.compose(fa, ga) {
                    if decomp[p.idx()].is_some() {
                        return Err(Error::NotExact {
                            arrow: sigma.label(p).to_string(),
                            count: 2,
                        });
                    }
                    decomp[p.idx()] = Some((ArrowId(i as u32), ArrowId(j as u32)));
                }
            }
        }
        if let Some(p) = sigma.arrows().find(|p| decomp[p.idx()].is_none()) {
            return Err(Error::NotExact {
                arrow: sigma.label(p).to_string(),
                count: 0,
            });
        }
        MatchedPair::from_actions(fv, gh, move |x, g| {
            let prod = sigma
                .compose(g_embed[x.idx()], f_embed[g.idx()])
                .expect("one-object groupoid composes everywhere");
            decomp[prod.idx()].expect("decomposition is total")
        })
    }
}

fn check_right_bundle_action(
    v: &FiniteGroupoid,
    n: &FiniteGroupoid,
    act: &impl Fn(ArrowId, ArrowId) -> ArrowId,
) -> Result<()> {
    let reject = |witness: String| Err(Error::NotAutomorphismAction(witness));
    for a in n.arrows() {
        for g in v.arrows() {
            if n.end(a) != v.src(g) {
                continue;
            }
            let ag = act(a, g);
            if n.src(ag) != v.end(g) || n.end(ag) != v.end(g) {
                return reject(format!("fiber of {} ◁ {}", n.label(a), v.label(g)));
            }
            // (a ◁ f) ◁ g = a ◁ fg
            for g2 in v.arrows() {
                if let Some(fg) = v.compose(g, g2) {
                    if act(ag, g2) != act(a, fg) {
                        return reject(format!(
                            "({} ◁ {}) ◁ {}",
                            n.label(a),
                            v.label(g),
                            v.label(g2)
                        ));
                    }
                }
            }
        }
        if act(a, v.id(n.end(a))) != a {
            return reject(format!("{} ◁ id", n.label(a)));
        }
    }
    // nm ◁ g = (n ◁ g)(m ◁ g)
    for a in n.arrows() {
        for b in n.arrows() {
            let Some(ab) = n.compose(a, b) else { continue };
            for g in v.arrows() {
                if v.src(g) != n.end(ab) {
                    continue;
                }
                if Some(act(ab, g)) != n.compose(act(a, g), act(b, g)) {
                    return reject(format!("({}·{}) ◁ {}", n.label(a), n.label(b), v.label(g)));
                }
            }
        }
    }
    Ok(())
}

fn check_left_bundle_action(
    n: &FiniteGroupoid,
    h: &FiniteGroupoid,
    act: &impl Fn(ArrowId, ArrowId) -> ArrowId,
) -> Result<()> {
    let reject = |witness: String| Err(Error::NotAutomorphismAction(witness));
    for a in n.arrows() {
        for x in h.arrows() {
            if h.end(x) != n.src(a) {
                continue;
            }
            let xa = act(x, a);
            if n.src(xa) != h.src(x) || n.end(xa) != h.src(x) {
                return reject(format!("fiber of {} ▷ {}", h.label(x), n.label(a)));
            }
            for y in h.arrows() {
                if let Some(yx) = h.compose(y, x) {
                    if act(y, xa) != act(yx, a) {
                        return reject(format!(
                            "{} ▷ ({} ▷ {})",
                            h.label(y),
                            h.label(x),
                            n.label(a)
                        ));
                    }
                }
            }
        }
        if act(h.id(n.src(a)), a) != a {
            return reject(format!("id ▷ {}", n.label(a)));
        }
    }
    // x ▷ nm = (x ▷ n)(x ▷ m)
    for a in n.arrows() {
        for b in n.arrows() {
            let Some(ab) = n.compose(a, b) else { continue };
            for x in h.arrows() {
                if h.end(x) != n.src(ab) {
                    continue;
                }
                if Some(act(x, ab)) != n.compose(act(x, a), act(x, b)) {
                    return reject(format!("{} ▷ ({}·{})", h.label(x), n.label(a), n.label(b)));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::zoo;

    fn assert_lawful(m: &MatchedPair) {
        let v = m.validate();
        assert!(v.is_ok(), "{v}");
        let d = m.derived_identities();
        assert!(d.is_ok(), "{d}");
    }

    #[test]
    fn initial_and_terminal_validate() {
        for n in 1..=3 {
            let i = MatchedPair::initial(n).unwrap();
            assert_lawful(&i);
            let t = MatchedPair::terminal(n).unwrap();
            assert_lawful(&t);
        }
        let i2 = MatchedPair::initial(2).unwrap();
        assert_eq!(i2.horizontal().arrow_count(), 2);
        assert_eq!(i2.vertical().arrow_count(), 4);
    }

    #[test]
    fn mxy_validates_and_specializes() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        assert_eq!(m.base_size(), 4);
        assert_eq!(m.horizontal().arrow_count(), 8);
        assert_eq!(m.vertical().arrow_count(), 8);
        assert_eq!(m.cell_count(), 16);
        assert_lawful(&m);
        // M({*}, Y) is the initial pair over Y, M(X, {*}) the terminal over X.
        assert_eq!(
            MatchedPair::mxy(1, 3).unwrap(),
            MatchedPair::initial(3).unwrap()
        );
        assert_eq!(
            MatchedPair::mxy(3, 1).unwrap(),
            MatchedPair::terminal(3).unwrap()
        );
    }

    #[test]
    fn corrupted_action_is_caught() {
        let m = MatchedPair::initial(3).unwrap();
        // Corrupt one ◁ entry: redirect to a wrong identity.
        let h = m.horizontal().clone();
        let v = m.vertical().clone();
        let bad = MatchedPair::from_actions(v.clone(), h.clone(), |x, g| {
            let c = Cell { top: x, right: g };
            let l = m.cell_left(c);
            let b = m.cell_bottom(c);
            if x == ArrowId(0) && g == ArrowId(1) {
                (l, h.id(ObjId(0))) // wrong endpoint on purpose
            } else {
                (l, b)
            }
        })
        .unwrap();
        let report = bad.validate();
        assert!(!report.is_ok());
        assert!(
            report.cites("right-action")
                || report.cites("product-compat")
                || report.cites("corner"),
            "{report}"
        );
    }

    #[test]
    fn dual_is_involutive_and_matches_known_duals() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        let d = m.dual();
        assert_lawful(&d);
        assert_eq!(d.dual(), m);
        // dual(initial) = terminal, dual(semi (V,P)) = (P,V).
        assert_eq!(
            MatchedPair::initial(3).unwrap().dual(),
            MatchedPair::terminal(3).unwrap()
        );
        let coarse = FiniteGroupoid::coarse(&["P", "Q"]).unwrap();
        let semi_v = MatchedPair::semi_vertical(&coarse);
        assert_lawful(&semi_v);
        assert_eq!(semi_v.dual(), MatchedPair::semi_horizontal(&coarse));
    }

    #[test]
    fn opposite_and_coopposite_are_involutive_and_lawful() {
        let (s3, c3, c2) = zoo::symmetric_3();
        let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        assert_lawful(&m);
        let op = m.opposite();
        assert_lawful(&op);
        assert_eq!(op.opposite(), m);
        let cop = m.coopposite();
        assert_lawful(&cop);
        assert_eq!(cop.coopposite(), m);
        let conj = MatchedPair::conjugation(&s3);
        assert_lawful(&conj);
        assert_lawful(&conj.coopposite());
    }

    #[test]
    fn cell_calculus() {
        let m = MatchedPair::mxy(2, 2).unwrap();
        // Inverse is an involution on every cell.
        for &c in m.cells() {
            assert_eq!(m.cell_inverse(m.cell_inverse(c)), c);
        }
        // Transpose lands in the dual and transposing back recovers the cell.
        let d = m.dual();
        for &c in m.cells() {
            let t = m.cell_transpose(c);
            assert!(d.cell_index(t).is_some());
            assert_eq!(d.cell_transpose(t), c);
        }
        // Inverting horizontal (resp. vertical) edges lands in the opposite
        // (resp. coopposite).
        let op = m.opposite();
        let cop = m.coopposite();
        for &c in m.cells() {
            assert!(op.cell_index(m.cell_to_opposite(c)).is_some());
            assert!(cop.cell_index(m.cell_to_coopposite(c)).is_some());
        }
        // Unit cells are units for the two compositions.
        for &c in m.cells() {
            let ih = m.unit_cell_h(m.cell_left(c));
            assert_eq!(m.horizontal_compose(ih, c), Some(c));
            let iv = m.unit_cell_v(c.top);
            assert_eq!(m.vertical_compose(iv, c), Some(c));
        }
    }

    #[test]
    fn group_pair_s3_and_c6() {
        let (s3, c3, c2) = zoo::symmetric_3();
        let m = MatchedPair::group_pair(&s3, &c3, &c2).unwrap();
        assert_eq!(m.vertical().arrow_count(), 3);
        assert_eq!(m.horizontal().arrow_count(), 2);
        assert_lawful(&m);

        let (c6, f2, g3) = zoo::cyclic_6_factored();
        let m6 = MatchedPair::group_pair(&c6, &f2, &g3).unwrap();
        assert_lawful(&m6);
        // Both factors normal in an abelian group: mutual actions trivial.
        for &c in m6.cells() {
            assert_eq!(m6.cell_left(c), c.right);
            assert_eq!(m6.cell_bottom(c), c.top);
        }

        // A non-exact factorization is rejected with a witness.
        let err = MatchedPair::group_pair(&s3, &c3, &c3).unwrap_err();
        assert!(matches!(err, Error::NotExact { .. }));
    }

    #[test]
    fn conjugation_pairs() {
        // Isotropy of coarse({P,Q}) is trivial: 2 identity arrows.
        let coarse = FiniteGroupoid::coarse(&["P", "Q"]).unwrap();
        let conj = MatchedPair::conjugation(&coarse);
        assert_eq!(conj.vertical().arrow_count(), 2);
        assert_lawful(&conj);
        // One-object S₃: the bundle is S₃ itself with x ▷ n = xnx⁻¹.
        let (s3, _, _) = zoo::symmetric_3();
        let conj3 = MatchedPair::conjugation(&s3);
        assert_eq!(conj3.vertical().arrow_count(), 6);
        assert_lawful(&conj3);
    }

    #[test]
    fn trivial_right_bundle_action_of_discrete() {
        let d = FiniteGroupoid::discrete(&["P", "Q"]).unwrap();
        let m = MatchedPair::bundle_action_right(&d, &d, |n, _g| n).unwrap();
        assert_lawful(&m);
    }

    #[test]
    fn semi_pairs_validate() {
        let coarse = FiniteGroupoid::coarse(&["P", "Q"]).unwrap();
        assert_lawful(&MatchedPair::semi_vertical(&coarse));
        let c3 = zoo::cyclic(3);
        assert_lawful(&MatchedPair::semi_horizontal(&c3));
    }
}
