//! Lindenmayer systems, turtle interpretation of words as lattice paths,
//! and rasterization of closed paths into regions.
//!
//! A system is a quadruple of variables, constants, an axiom and
//! production rules. Rewriting replaces every variable simultaneously;
//! `F` is the drawing primitive (one unit step) and may itself be a
//! variable, `+` and `-` turn the heading 90° left and right. Adjacent
//! `-+` and `+-` pairs carry no meaning and are deleted.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::region::{Cell, Edge, Region};

/// One symbol of a word: `F`, `+`, `-`, or a named variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Forward,
    Left,
    Right,
    Var(char),
}

impl Symbol {
    pub fn from_char(c: char) -> Symbol {
        match c {
            'F' => Symbol::Forward,
            '+' => Symbol::Left,
            '-' => Symbol::Right,
            v => Symbol::Var(v),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Forward => 'F',
            Symbol::Left => '+',
            Symbol::Right => '-',
            Symbol::Var(v) => v,
        }
    }
}

/// A finite word over the symbol alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn parse(s: &str) -> Word {
        Word(s.chars().filter(|c| !c.is_whitespace()).map(Symbol::from_char).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn forward_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == Symbol::Forward).count()
    }

    /// Delete adjacent `-+` and `+-` pairs until none remain.
    pub fn simplified(&self) -> Word {
        let mut out: Vec<Symbol> = Vec::with_capacity(self.0.len());
        for &s in &self.0 {
            match (out.last(), s) {
                (Some(Symbol::Left), Symbol::Right) | (Some(Symbol::Right), Symbol::Left) => {
                    out.pop();
                }
                _ => out.push(s),
            }
        }
        Word(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// Errors from building or rewriting an L-system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LSystemError {
    /// A symbol appears in both the variable and constant sets.
    OverlappingAlphabets(char),
    /// A production rule is keyed on an undeclared variable.
    RuleForNonVariable(char),
    /// A word uses a symbol that is neither declared nor one of `F+-`.
    UndeclaredSymbol(char),
    /// Rewriting exceeded the configured word-length cap.
    WordTooLarge { len: usize, cap: usize },
}

impl fmt::Display for LSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LSystemError::OverlappingAlphabets(c) => {
                write!(f, "symbol '{c}' is declared both variable and constant")
            }
            LSystemError::RuleForNonVariable(c) => {
                write!(f, "production rule for undeclared variable '{c}'")
            }
            LSystemError::UndeclaredSymbol(c) => write!(f, "undeclared symbol '{c}'"),
            LSystemError::WordTooLarge { len, cap } => {
                write!(f, "word length {len} exceeds cap {cap}")
            }
        }
    }
}

impl core::error::Error for LSystemError {}

/// Default cap on rewritten word length.
pub const DEFAULT_WORD_CAP: usize = 100_000_000;

/// A Lindenmayer system: variables, constants, axiom and production rules.
#[derive(Clone, Debug)]
pub struct LSystem {
    variables: BTreeSet<Symbol>,
    constants: BTreeSet<Symbol>,
    axiom: Word,
    rules: BTreeMap<Symbol, Word>,
}

impl LSystem {
    /// Build and validate a system. `variables` and `constants` are given
    /// as their characters; `F`, `+` and `-` are always available and need
    /// not be declared (declaring `F` a variable makes it rewritable).
    pub fn new(
        variables: &str,
        constants: &str,
        axiom: Word,
        rules: &[(char, Word)],
    ) -> Result<LSystem, LSystemError> {
        let vars: BTreeSet<Symbol> = variables.chars().map(Symbol::from_char).collect();
        let consts: BTreeSet<Symbol> = constants.chars().map(Symbol::from_char).collect();
        if let Some(s) = vars.intersection(&consts).next() {
            return Err(LSystemError::OverlappingAlphabets(s.to_char()));
        }
        let mut rule_map = BTreeMap::new();
        for (key, body) in rules {
            let key = Symbol::from_char(*key);
            if !vars.contains(&key) {
                return Err(LSystemError::RuleForNonVariable(key.to_char()));
            }
            rule_map.insert(key, body.clone());
        }
        let sys = LSystem { variables: vars, constants: consts, axiom, rules: rule_map };
        sys.check_word(&sys.axiom)?;
        for body in sys.rules.values() {
            sys.check_word(body)?;
        }
        Ok(sys)
    }

    fn check_word(&self, w: &Word) -> Result<(), LSystemError> {
        for &s in &w.0 {
            let builtin = matches!(s, Symbol::Forward | Symbol::Left | Symbol::Right);
            if !builtin && !self.variables.contains(&s) && !self.constants.contains(&s) {
                return Err(LSystemError::UndeclaredSymbol(s.to_char()));
            }
        }
        Ok(())
    }

    pub fn axiom(&self) -> &Word {
        &self.axiom
    }

    pub fn variables(&self) -> impl Iterator<Item = char> + '_ {
        self.variables.iter().map(|s| s.to_char())
    }

    pub fn constants(&self) -> impl Iterator<Item = char> + '_ {
        self.constants.iter().map(|s| s.to_char())
    }

    pub fn rules(&self) -> impl Iterator<Item = (char, &Word)> {
        self.rules.iter().map(|(k, v)| (k.to_char(), v))
    }
}

/// Apply the production rules `steps` times in parallel, then delete all
/// null turn pairs.
pub fn rewrite(sys: &LSystem, steps: u32) -> Result<Word, LSystemError> {
    rewrite_capped(sys, steps, DEFAULT_WORD_CAP)
}

/// [`rewrite`] with an explicit word-length cap.
pub fn rewrite_capped(sys: &LSystem, steps: u32, cap: usize) -> Result<Word, LSystemError> {
    let mut word = sys.axiom.clone();
    for _ in 0..steps {
        let mut next = Vec::with_capacity(word.len() * 2);
        for &s in &word.0 {
            match sys.rules.get(&s) {
                Some(body) => next.extend_from_slice(&body.0),
                None => next.push(s),
            }
            if next.len() > cap {
                return Err(LSystemError::WordTooLarge { len: next.len(), cap });
            }
        }
        word = Word(next);
    }
    Ok(word.simplified())
}

/// The closing tail replacement failed because the word does not end with
/// the expected `+Fb-F` pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternNotFound;

impl fmt::Display for PatternNotFound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "word does not end with the +Fb-F closing pattern")
    }
}

impl core::error::Error for PatternNotFound {}

/// Close a Moore polygon word by re-aiming its final segment: the last `F`
/// becomes `+F`, and the null turn pair this creates is deleted. At odd
/// iterations the word ends `...+Fb-F` and the fix-up reduces to replacing
/// that tail with `...+FbF`; at even iterations the tail is `...FaF` and
/// the inserted left turn survives. The result is verified to close.
pub fn close_moore(word: &Word) -> Result<Word, PatternNotFound> {
    if word.0.last() != Some(&Symbol::Forward) {
        return Err(PatternNotFound);
    }
    let mut out = word.0[..word.len() - 1].to_vec();
    out.push(Symbol::Left);
    out.push(Symbol::Forward);
    let closed = Word(out).simplified();
    if !turtle(&closed, (0, 0), Step::E).is_closed() {
        return Err(PatternNotFound);
    }
    Ok(closed)
}

/// A lattice path: a start vertex and a sequence of unit steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    pub start: (i32, i32),
    pub steps: Vec<Step>,
}

/// One unit move of the turtle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    E,
    N,
    W,
    S,
}

impl Step {
    fn left(self) -> Step {
        match self {
            Step::E => Step::N,
            Step::N => Step::W,
            Step::W => Step::S,
            Step::S => Step::E,
        }
    }

    fn right(self) -> Step {
        match self {
            Step::E => Step::S,
            Step::S => Step::W,
            Step::W => Step::N,
            Step::N => Step::E,
        }
    }

    fn apply(self, v: (i32, i32)) -> (i32, i32) {
        match self {
            Step::E => (v.0 + 1, v.1),
            Step::N => (v.0, v.1 + 1),
            Step::W => (v.0 - 1, v.1),
            Step::S => (v.0, v.1 - 1),
        }
    }
}

impl LatticePath {
    pub fn endpoint(&self) -> (i32, i32) {
        self.steps.iter().fold(self.start, |v, s| s.apply(v))
    }

    pub fn is_closed(&self) -> bool {
        !self.steps.is_empty() && self.endpoint() == self.start
    }

    /// The vertices visited, starting with `start`.
    pub fn vertices(&self) -> Vec<(i32, i32)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut v = self.start;
        out.push(v);
        for s in &self.steps {
            v = s.apply(v);
            out.push(v);
        }
        out
    }
}

/// Interpret a word as a turtle path. `F` emits a unit step in the current
/// heading, `+` and `-` rotate the heading left and right; variables are
/// ignored as motion commands.
pub fn turtle(word: &Word, start: (i32, i32), heading: Step) -> LatticePath {
    let mut dir = heading;
    let mut steps = Vec::new();
    for &s in &word.0 {
        match s {
            Symbol::Forward => steps.push(dir),
            Symbol::Left => dir = dir.left(),
            Symbol::Right => dir = dir.right(),
            Symbol::Var(_) => {}
        }
    }
    LatticePath { start, steps }
}

/// A path must be closed before it can bound a region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathNotClosed;

impl fmt::Display for PathNotClosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path endpoint differs from its start")
    }
}

impl core::error::Error for PathNotClosed {}

/// Cells enclosed by a closed path under the even-odd rule.
///
/// Edges traversed an even number of times cancel, so a self-touching
/// (pinched) path yields the corner-touching region it outlines. A cell is
/// inside when a ray from its centre crosses the surviving edge set an odd
/// number of times.
pub fn path_to_region(path: &LatticePath) -> Result<Region, PathNotClosed> {
    if !path.is_closed() {
        return Err(PathNotClosed);
    }
    // XOR the traversed edges into a set.
    let mut edges: HashSet<Edge> = HashSet::with_capacity(path.steps.len());
    let mut v = path.start;
    for s in &path.steps {
        let next = s.apply(v);
        let lo = (v.0.min(next.0), v.1.min(next.1));
        let edge = if v.1 == next.1 {
            Edge::horizontal(lo.0, lo.1)
        } else {
            Edge::vertical(lo.0, lo.1)
        };
        if !edges.insert(edge) {
            edges.remove(&edge);
        }
        v = next;
    }
    if edges.is_empty() {
        return Ok(Region::new());
    }
    let min_x = edges.iter().map(|e| e.x).min().unwrap();
    let max_x = edges.iter().map(|e| e.x).max().unwrap();
    let min_y = edges.iter().map(|e| e.y).min().unwrap();
    let max_y = edges.iter().map(|e| e.y).max().unwrap();

    // Scanline parity fill: walking east along a row of cells, membership
    // flips exactly at vertical edges.
    let mut cells = HashSet::new();
    for y in min_y..max_y {
        let mut inside = false;
        for x in min_x..=max_x {
            if edges.contains(&Edge::vertical(x, y)) {
                inside = !inside;
            }
            if inside {
                cells.insert(Cell::new(x, y));
            }
        }
    }
    Ok(Region::from_cells(cells))
}

/// The Moore polygon L-system over variables `a`, `b`.
pub fn moore_system() -> LSystem {
    LSystem::new(
        "ab",
        "",
        Word::parse("aFa+F+aFa"),
        &[('a', Word::parse("-bF+aFa+Fb-")), ('b', Word::parse("+aF-bFb-Fa+"))],
    )
    .expect("static system is well formed")
}

/// The quadratic Koch L-system; `F` is the rewritten variable and the axiom
/// traces the unit square.
pub fn koch_system() -> LSystem {
    LSystem::new("F", "", Word::parse("F+F+F+F"), &[('F', Word::parse("F+F-F-F+F"))])
        .expect("static system is well formed")
}

/// The polygon word of the Moore curve at iteration `n`: the rewritten word
/// with the closing segment appended. Its `F`-count is `4^(n+1)`.
pub fn moore_polygon_word(n: u32) -> Result<Word, LSystemError> {
    let mut w = rewrite(&moore_system(), n)?;
    w.0.push(Symbol::Forward);
    Ok(w)
}
