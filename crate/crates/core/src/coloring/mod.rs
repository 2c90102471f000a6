// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Total colorings, color sets and their verification.

mod finders;
mod json;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Element, Graph};

pub use finders::{find_equalizing_color, find_extension_color};
pub use json::{ColoringDocument, EdgeColor, VerificationSummary};
pub use verify::{
    is_proper_total, lower_bound, lower_bound_detail, verify_r_vsdtc, LowerBound,
    LowerBoundReason, VerificationReport, Violation, ViolationKind,
};

/// Colors are 1-based.
pub type Color = u32;

const WORDS: usize = 8;

/// Largest palette a [`ColorSet`] can hold.
pub const MAX_PALETTE: usize = WORDS * 64 - 1;

/// Fixed-width bitset over colors `1..=MAX_PALETTE`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet {
    bits: [u64; WORDS],
}

impl ColorSet {
    pub const fn new() -> ColorSet {
        ColorSet { bits: [0; WORDS] }
    }

    /// `{1, ..., k}`.
    pub fn full(k: usize) -> ColorSet {
        assert!(k <= MAX_PALETTE, "palette {k} exceeds {MAX_PALETTE}");
        let mut s = ColorSet::new();
        for c in 1..=k as Color {
            s.insert(c);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, c: Color) -> bool {
        let (w, b) = Self::slot(c);
        let had = self.bits[w] >> b & 1 == 1;
        self.bits[w] |= 1 << b;
        !had
    }

    #[inline]
    pub fn remove(&mut self, c: Color) -> bool {
        let (w, b) = Self::slot(c);
        let had = self.bits[w] >> b & 1 == 1;
        self.bits[w] &= !(1 << b);
        had
    }

    #[inline]
    pub fn contains(&self, c: Color) -> bool {
        let (w, b) = Self::slot(c);
        self.bits[w] >> b & 1 == 1
    }

    #[inline]
    pub fn with(mut self, c: Color) -> ColorSet {
        self.insert(c);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &ColorSet) -> ColorSet {
        self.zip(other, |a, b| a | b)
    }

    #[inline]
    pub fn intersection(&self, other: &ColorSet) -> ColorSet {
        self.zip(other, |a, b| a & b)
    }

    #[inline]
    pub fn difference(&self, other: &ColorSet) -> ColorSet {
        self.zip(other, |a, b| a & !b)
    }

    /// Symmetric difference.
    #[inline]
    pub fn xor(&self, other: &ColorSet) -> ColorSet {
        self.zip(other, |a, b| a ^ b)
    }

    #[inline]
    pub fn is_subset(&self, other: &ColorSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Smallest color, if any.
    pub fn first(&self) -> Option<Color> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| (i * 64) as Color + w.trailing_zeros())
    }

    /// Largest color, if any.
    pub fn last(&self) -> Option<Color> {
        self.bits
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| (i * 64) as Color + 63 - w.leading_zeros())
    }

    /// Smallest color in `1..=k` that is not in the set.
    pub fn first_absent(&self, k: usize) -> Option<Color> {
        (1..=k as Color).find(|&c| !self.contains(c))
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros();
                word &= word - 1;
                Some((i * 64) as Color + b)
            })
        })
    }

    #[inline]
    fn zip(&self, other: &ColorSet, f: impl Fn(u64, u64) -> u64) -> ColorSet {
        let mut bits = [0; WORDS];
        for (i, slot) in bits.iter_mut().enumerate() {
            *slot = f(self.bits[i], other.bits[i]);
        }
        ColorSet { bits }
    }

    #[inline]
    fn slot(c: Color) -> (usize, u32) {
        debug_assert!(c >= 1 && (c as usize) <= MAX_PALETTE, "color {c} out of range");
        ((c / 64) as usize, c % 64)
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::new();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Partial or complete assignment of colors `1..=palette_size` to vertices and
/// edges of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalColoring {
    palette_size: usize,
    vertex_colors: Vec<Option<Color>>,
    edge_colors: Vec<Option<Color>>,
}

impl TotalColoring {
    /// Everything unassigned.
    pub fn new(g: &Graph, palette_size: usize) -> TotalColoring {
        TotalColoring::blank(g.n(), g.m(), palette_size)
    }

    pub fn blank(n: usize, m: usize, palette_size: usize) -> TotalColoring {
        assert!(palette_size <= MAX_PALETTE, "palette {palette_size} exceeds {MAX_PALETTE}");
        TotalColoring {
            palette_size,
            vertex_colors: vec![None; n],
            edge_colors: vec![None; m],
        }
    }

    pub fn from_parts(
        palette_size: usize,
        vertex_colors: Vec<Option<Color>>,
        edge_colors: Vec<Option<Color>>,
    ) -> Result<TotalColoring> {
        if palette_size > MAX_PALETTE {
            return Err(Error::InvalidInput(format!(
                "palette {palette_size} exceeds {MAX_PALETTE}"
            )));
        }
        let bad = vertex_colors
            .iter()
            .chain(&edge_colors)
            .flatten()
            .find(|&&c| c == 0 || c as usize > palette_size);
        if let Some(c) = bad {
            return Err(Error::InvalidInput(format!(
                "color {c} outside palette 1..={palette_size}"
            )));
        }
        Ok(TotalColoring {
            palette_size,
            vertex_colors,
            edge_colors,
        })
    }

    /// Convenience constructor for fully assigned colorings.
    pub fn from_total(
        palette_size: usize,
        vertex_colors: &[Color],
        edge_colors: &[Color],
    ) -> Result<TotalColoring> {
        TotalColoring::from_parts(
            palette_size,
            vertex_colors.iter().map(|&c| Some(c)).collect(),
            edge_colors.iter().map(|&c| Some(c)).collect(),
        )
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Grows (never shrinks below the largest used color) the palette.
    pub fn set_palette_size(&mut self, k: usize) {
        let used = self.max_color().unwrap_or(0) as usize;
        assert!(k >= used && k <= MAX_PALETTE, "palette {k} cannot hold color {used}");
        self.palette_size = k;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_colors.len()
    }

    #[inline]
    pub fn vertex(&self, v: usize) -> Option<Color> {
        self.vertex_colors[v]
    }

    #[inline]
    pub fn edge(&self, e: usize) -> Option<Color> {
        self.edge_colors[e]
    }

    pub fn get(&self, x: Element) -> Option<Color> {
        match x {
            Element::Vertex(v) => self.vertex(v),
            Element::Edge(e) => self.edge(e),
        }
    }

    #[inline]
    pub fn set_vertex(&mut self, v: usize, c: Color) {
        self.check(c);
        self.vertex_colors[v] = Some(c);
    }

    #[inline]
    pub fn set_edge(&mut self, e: usize, c: Color) {
        self.check(c);
        self.edge_colors[e] = Some(c);
    }

    pub fn set(&mut self, x: Element, c: Color) {
        match x {
            Element::Vertex(v) => self.set_vertex(v, c),
            Element::Edge(e) => self.set_edge(e, c),
        }
    }

    pub fn clear(&mut self, x: Element) {
        match x {
            Element::Vertex(v) => self.vertex_colors[v] = None,
            Element::Edge(e) => self.edge_colors[e] = None,
        }
    }

    pub fn vertex_colors(&self) -> &[Option<Color>] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> &[Option<Color>] {
        &self.edge_colors
    }

    pub fn is_total(&self) -> bool {
        self.vertex_colors.iter().chain(&self.edge_colors).all(Option::is_some)
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.used_colors().len()
    }

    pub fn used_colors(&self) -> ColorSet {
        self.vertex_colors
            .iter()
            .chain(&self.edge_colors)
            .flatten()
            .copied()
            .collect()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.used_colors().last()
    }

    /// Checks that the shape matches `g`.
    pub fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.vertex_count() != g.n() || self.edge_count() != g.m() {
            return Err(Error::InvalidInput(format!(
                "coloring covers {} vertices / {} edges, graph has {} / {}",
                self.vertex_count(),
                self.edge_count(),
                g.n(),
                g.m()
            )));
        }
        Ok(())
    }

    /// Renumbers used colors to `1..=colors_used()` preserving their order.
    pub fn compacted(&self) -> TotalColoring {
        let used: Vec<Color> = self.used_colors().iter().collect();
        let mut map = vec![0 as Color; self.palette_size + 1];
        for (i, &c) in used.iter().enumerate() {
            map[c as usize] = i as Color + 1;
        }
        let remap = |xs: &[Option<Color>]| xs.iter().map(|c| c.map(|c| map[c as usize])).collect();
        TotalColoring {
            palette_size: used.len(),
            vertex_colors: remap(&self.vertex_colors),
            edge_colors: remap(&self.edge_colors),
        }
    }

    #[inline]
    fn check(&self, c: Color) {
        assert!(
            c >= 1 && c as usize <= self.palette_size,
            "color {c} outside palette 1..={}",
            self.palette_size
        );
    }
}

/// `C_f⟨u⟩`: colors on `u`, its neighbors and its incident edges.
pub fn color_set(g: &Graph, f: &TotalColoring, u: usize) -> Result<ColorSet> {
    let mut s = ColorSet::new();
    s.insert(f.vertex(u).ok_or(Error::BadVertex(u))?);
    for &(w, e) in g.incident(u) {
        s.insert(f.vertex(w).ok_or(Error::BadVertex(u))?);
        s.insert(f.edge(e).ok_or(Error::BadVertex(u))?);
    }
    Ok(s)
}

/// Colors on `N⟨u⟩` that are assigned so far.
pub fn partial_color_set(g: &Graph, f: &TotalColoring, u: usize) -> ColorSet {
    let mut s = ColorSet::new();
    s.extend_opt(f.vertex(u));
    for &(w, e) in g.incident(u) {
        s.extend_opt(f.vertex(w));
        s.extend_opt(f.edge(e));
    }
    s
}

/// `C_f(u)`: colors on the assigned edges incident to `u`.
pub fn edge_color_set(g: &Graph, f: &TotalColoring, u: usize) -> ColorSet {
    g.incident(u).iter().filter_map(|&(_, e)| f.edge(e)).collect()
}

impl ColorSet {
    #[inline]
    pub(crate) fn extend_opt(&mut self, c: Option<Color>) {
        if let Some(c) = c {
            self.insert(c);
        }
    }
}
