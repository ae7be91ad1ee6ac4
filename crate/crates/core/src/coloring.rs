//! Color alphabets, coloring containers and the distance-constraint
//! verifiers for S-colorings, feasible colorings, good colorings and packing
//! colorings.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, UNREACHABLE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices, graph has {expected}")]
    PartialColoring { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color} outside the alphabet")]
    AlphabetMismatch { vertex: usize, color: String },
    #[error("vertex {0} is not colored 1a or 1b")]
    NotAOneColor(usize),
    #[error("invalid S sequence: {0}")]
    InvalidSpec(String),
    #[error("unknown color name {0:?}")]
    UnknownColor(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
}

impl Family {
    pub fn other(self) -> Family {
        match self {
            Family::A => Family::B,
            Family::B => Family::A,
        }
    }
}

/// One of the six colors `1a 1b 2a 2b 3a 3b` of a feasible coloring. A vertex
/// colored at level `i` must be at distance at least `i + 1` from every other
/// vertex of the same color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SixColor {
    OneA,
    OneB,
    TwoA,
    TwoB,
    ThreeA,
    ThreeB,
}

impl SixColor {
    /// All six colors in the fixed order `1a < 1b < 2a < 2b < 3a < 3b`.
    pub const ALL: [SixColor; 6] =
        [SixColor::OneA, SixColor::OneB, SixColor::TwoA, SixColor::TwoB, SixColor::ThreeA, SixColor::ThreeB];
    pub const ONES: [SixColor; 2] = [SixColor::OneA, SixColor::OneB];
    pub const TWOS: [SixColor; 2] = [SixColor::TwoA, SixColor::TwoB];
    pub const THREES: [SixColor; 2] = [SixColor::ThreeA, SixColor::ThreeB];

    pub fn new(level: u8, family: Family) -> SixColor {
        match (level, family) {
            (1, Family::A) => SixColor::OneA,
            (1, Family::B) => SixColor::OneB,
            (2, Family::A) => SixColor::TwoA,
            (2, Family::B) => SixColor::TwoB,
            (3, Family::A) => SixColor::ThreeA,
            (3, Family::B) => SixColor::ThreeB,
            _ => panic!("no color at level {level}"),
        }
    }

    pub fn level(self) -> u8 {
        self.index() as u8 / 2 + 1
    }

    pub fn family(self) -> Family {
        if self.index().is_multiple_of(2) {
            Family::A
        } else {
            Family::B
        }
    }

    /// Position in the fixed class order, `0..6`.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Same level, other family.
    pub fn partner(self) -> SixColor {
        SixColor::new(self.level(), self.family().other())
    }

    pub fn is_one(self) -> bool {
        self.level() == 1
    }

    pub fn is_three(self) -> bool {
        self.level() == 3
    }

    pub fn name(self) -> &'static str {
        ["1a", "1b", "2a", "2b", "3a", "3b"][self.index()]
    }
}

impl fmt::Display for SixColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SixColor {
    type Err = ColoringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SixColor::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| ColoringError::UnknownColor(s.to_string()))
    }
}

/// Color of a good coloring: a feasible color or the single extra color 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GoodColor {
    Six(SixColor),
    Four,
}

impl GoodColor {
    pub fn level(self) -> u8 {
        match self {
            GoodColor::Six(c) => c.level(),
            GoodColor::Four => 4,
        }
    }

    pub fn six(self) -> Option<SixColor> {
        match self {
            GoodColor::Six(c) => Some(c),
            GoodColor::Four => None,
        }
    }
}

impl From<SixColor> for GoodColor {
    fn from(c: SixColor) -> Self {
        GoodColor::Six(c)
    }
}

impl fmt::Display for GoodColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodColor::Six(c) => c.fmt(f),
            GoodColor::Four => f.write_str("4"),
        }
    }
}

impl FromStr for GoodColor {
    type Err = ColoringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "4" {
            Ok(GoodColor::Four)
        } else {
            s.parse().map(GoodColor::Six)
        }
    }
}

/// Colors with a distance requirement: two distinct vertices of the same
/// class must be at distance strictly greater than `separation`.
pub trait Separated: Copy + Eq {
    fn class_key(&self) -> usize;
    fn separation(&self) -> u32;
    fn label(&self) -> ClassLabel;
}

impl Separated for SixColor {
    fn class_key(&self) -> usize {
        self.index()
    }
    fn separation(&self) -> u32 {
        self.level() as u32
    }
    fn label(&self) -> ClassLabel {
        ClassLabel::Six(*self)
    }
}

impl Separated for GoodColor {
    fn class_key(&self) -> usize {
        match self {
            GoodColor::Six(c) => c.index(),
            GoodColor::Four => 6,
        }
    }
    fn separation(&self) -> u32 {
        self.level() as u32
    }
    fn label(&self) -> ClassLabel {
        match self {
            GoodColor::Six(c) => ClassLabel::Six(*c),
            GoodColor::Four => ClassLabel::Four,
        }
    }
}

/// Colors whose `1a`/`1b` classes can be exchanged along a component.
pub trait OneSwap: Copy {
    fn is_one(&self) -> bool;
    fn swapped_one(&self) -> Self;
}

impl OneSwap for SixColor {
    fn is_one(&self) -> bool {
        self.level() == 1
    }
    fn swapped_one(&self) -> Self {
        if self.level() == 1 {
            self.partner()
        } else {
            *self
        }
    }
}

impl OneSwap for GoodColor {
    fn is_one(&self) -> bool {
        matches!(self, GoodColor::Six(c) if c.is_one())
    }
    fn swapped_one(&self) -> Self {
        match self {
            GoodColor::Six(c) => GoodColor::Six(c.swapped_one()),
            GoodColor::Four => GoodColor::Four,
        }
    }
}

/// Non-decreasing sequence of positive separations `(s_1, ..., s_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SSpec(Vec<u32>);

impl SSpec {
    pub fn new(s: Vec<u32>) -> Result<Self, ColoringError> {
        if s.is_empty() {
            return Err(ColoringError::InvalidSpec("empty sequence".into()));
        }
        if s.contains(&0) {
            return Err(ColoringError::InvalidSpec("separations must be positive".into()));
        }
        if s.windows(2).any(|w| w[0] > w[1]) {
            return Err(ColoringError::InvalidSpec("sequence must be non-decreasing".into()));
        }
        Ok(SSpec(s))
    }

    /// The sequence `(1, 2, ..., k)` of a packing `k`-coloring.
    pub fn packing(k: u32) -> Self {
        SSpec((1..=k).collect())
    }

    /// `(1, 1, 2, 2, 3, 3)`, the sequence behind feasible colorings.
    pub fn feasible() -> Self {
        SSpec(vec![1, 1, 2, 2, 3, 3])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Separation of 1-based class `i`.
    pub fn separation(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl FromStr for SSpec {
    type Err = ColoringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| ColoringError::InvalidSpec(e.to_string()))?;
        SSpec::new(parts)
    }
}

/// A total vertex coloring. Index `v` holds the color of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring<C> {
    colors: Vec<C>,
}

impl<C: Copy> Coloring<C> {
    pub fn new(colors: Vec<C>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> C {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: C) {
        self.colors[v] = c;
    }

    pub fn as_slice(&self) -> &[C] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<C> {
        self.colors
    }

    pub fn iter(&self) -> impl Iterator<Item = C> + '_ {
        self.colors.iter().copied()
    }

    pub fn map<D: Copy>(&self, f: impl Fn(C) -> D) -> Coloring<D> {
        Coloring::new(self.colors.iter().map(|&c| f(c)).collect())
    }

    fn check_total(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.n() {
            Err(ColoringError::PartialColoring { expected: g.n(), got: self.colors.len() })
        } else {
            Ok(())
        }
    }
}

impl<C> std::ops::Index<usize> for Coloring<C> {
    type Output = C;
    fn index(&self, v: usize) -> &C {
        &self.colors[v]
    }
}

/// Which class a conflict belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    Six(SixColor),
    Four,
    /// 1-based index into an `SSpec`.
    SpecIndex(usize),
    /// Packing color `i`.
    Packing(u32),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Six(c) => write!(f, "{c}"),
            ClassLabel::Four => f.write_str("4"),
            ClassLabel::SpecIndex(i) => write!(f, "class {i}"),
            ClassLabel::Packing(i) => write!(f, "color {i}"),
        }
    }
}

/// Two distinct vertices `x < y` of the same class that are too close.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Conflict {
    pub class: ClassLabel,
    pub x: usize,
    pub y: usize,
    pub dist: u32,
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: vertices {} and {} at distance {}", self.class, self.x, self.y, self.dist)
    }
}

/// Every pair of same-class vertices closer than their separation allows.
/// `class_of(v)` returns `(class key, separation, label)`; vertices mapped to
/// `None` are ignored.
fn pairwise_conflicts<F>(g: &Graph, class_of: F) -> Vec<Conflict>
where
    F: Fn(usize) -> Option<(usize, u32, ClassLabel)>,
{
    let n = g.n();
    let table = g.distances();
    let classes: Vec<_> = (0..n).map(&class_of).collect();
    let mut out = Vec::new();
    for x in 0..n {
        let Some((kx, sep, label)) = classes[x] else { continue };
        for (y, cy) in classes.iter().enumerate().skip(x + 1) {
            if let Some((ky, _, _)) = *cy {
                let d = table.get(x, y);
                if kx == ky && d != UNREACHABLE && d <= sep {
                    out.push(Conflict { class: label, x, y, dist: d });
                }
            }
        }
    }
    out
}

/// Checks an S-coloring given by 1-based class indices.
pub fn verify_s_coloring(g: &Graph, spec: &SSpec, c: &Coloring<usize>) -> Result<Vec<Conflict>, ColoringError> {
    c.check_total(g)?;
    if let Some((v, &i)) = c.as_slice().iter().enumerate().find(|(_, &i)| i == 0 || i > spec.len()) {
        return Err(ColoringError::AlphabetMismatch { vertex: v, color: i.to_string() });
    }
    Ok(pairwise_conflicts(g, |v| {
        let i = c.get(v);
        Some((i, spec.separation(i), ClassLabel::SpecIndex(i)))
    }))
}

pub fn verify_feasible(g: &Graph, f: &Coloring<SixColor>) -> Result<Vec<Conflict>, ColoringError> {
    f.check_total(g)?;
    Ok(pairwise_conflicts(g, |v| {
        let c = f.get(v);
        Some((c.class_key(), c.separation(), c.label()))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodReport {
    pub conflicts: Vec<Conflict>,
    pub four_count: usize,
}

impl GoodReport {
    pub fn is_valid(&self) -> bool {
        self.conflicts.is_empty() && self.four_count <= 1
    }
}

pub fn verify_good(g: &Graph, f: &Coloring<GoodColor>) -> Result<GoodReport, ColoringError> {
    f.check_total(g)?;
    let conflicts = pairwise_conflicts(g, |v| {
        let c = f.get(v);
        Some((c.class_key(), c.separation(), c.label()))
    });
    let four_count = f.iter().filter(|&c| c == GoodColor::Four).count();
    Ok(GoodReport { conflicts, four_count })
}

/// Checks a packing coloring with positive integer colors: color `i` must be
/// `i`-independent.
pub fn verify_packing(g: &Graph, c: &Coloring<u32>) -> Result<Vec<Conflict>, ColoringError> {
    c.check_total(g)?;
    if let Some(v) = c.as_slice().iter().position(|&i| i == 0) {
        return Err(ColoringError::AlphabetMismatch { vertex: v, color: "0".into() });
    }
    Ok(pairwise_conflicts(g, |v| {
        let i = c.get(v);
        Some((i as usize, i, ClassLabel::Packing(i)))
    }))
}

/// Exchanges `1a` and `1b` on the component containing `v` of the subgraph
/// induced by the `1a`/`1b`-colored vertices.
pub fn swap_ones_component<C: OneSwap>(g: &Graph, f: &Coloring<C>, v: usize) -> Result<Coloring<C>, ColoringError> {
    f.check_total(g)?;
    if !f.get(v).is_one() {
        return Err(ColoringError::NotAOneColor(v));
    }
    let mut out = f.clone();
    for x in ones_component(g, |x| f.get(x).is_one(), v) {
        out.set(x, f.get(x).swapped_one());
    }
    Ok(out)
}

/// Component of `start` in the subgraph induced by vertices satisfying
/// `is_one`, ascending.
pub(crate) fn ones_component(g: &Graph, is_one: impl Fn(usize) -> bool, start: usize) -> Vec<usize> {
    let mut members = vec![start];
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        i += 1;
        for &y in g.neighbors(x) {
            if !seen[y] && is_one(y) {
                seen[y] = true;
                members.push(y);
            }
        }
    }
    members.sort_unstable();
    members
}

/// Colors of `alphabet` that `v` could take without creating a conflict.
/// `f` may leave vertices (including `v`) uncolored; `v`'s own color is
/// ignored.
pub fn free_color_at<C: Separated>(g: &Graph, f: &[Option<C>], v: usize, alphabet: &[C]) -> Vec<C> {
    alphabet.iter().copied().filter(|&c| color_fits(g, f, v, c)).collect()
}

/// Whether giving `v` color `c` keeps every same-class vertex far enough.
pub(crate) fn color_fits<C: Separated>(g: &Graph, f: &[Option<C>], v: usize, c: C) -> bool {
    let mut ok = true;
    g.for_each_within(v, c.separation(), |u, _| {
        if u != v && f[u].map(|cu| cu.class_key()) == Some(c.class_key()) {
            ok = false;
        }
    });
    ok
}

/// Whether every listed vertex (if colored) is far enough from all others of
/// its class. Checking the recolored vertices suffices after a local rewrite.
pub(crate) fn locally_feasible<C: Separated>(g: &Graph, f: &[Option<C>], vs: &[usize]) -> bool {
    vs.iter().all(|&v| match f[v] {
        Some(c) => color_fits(g, f, v, c),
        None => true,
    })
}

/// Feasibility of a partial coloring, ignoring uncolored vertices.
pub(crate) fn partial_feasible<C: Separated>(g: &Graph, f: &[Option<C>]) -> bool {
    let all: Vec<usize> = (0..g.n()).collect();
    locally_feasible(g, f, &all)
}
