//! Backtracking enumeration of integer fillings in row-major lexicographic
//! order.

use super::{Filling, Tableau};
use crate::shapes::{Cell, Diagram};

#[derive(Clone, Copy)]
enum Rule {
    Semistandard,
    Increasing,
}

struct Search<'a, D: Diagram, F> {
    work: Filling<D, u32>,
    cells: Vec<Cell>,
    max: u32,
    rule: Rule,
    // When set, every value in 1..=max must be used.
    onto: bool,
    used: Vec<usize>,
    missing: usize,
    visit: &'a mut F,
}

impl<D: Diagram, F: FnMut(&Tableau<D>)> Search<'_, D, F> {
    fn lower_bound(&self, c: Cell) -> u32 {
        let left = self.work.get(Cell::new(c.row, c.col.wrapping_sub(1))).copied().unwrap_or(0);
        let above = if c.row > 1 { self.work.get(Cell::new(c.row - 1, c.col)).copied().unwrap_or(0) } else { 0 };
        match self.rule {
            Rule::Semistandard => left.max(above + 1).max(1),
            Rule::Increasing => (left + 1).max(above + 1),
        }
    }

    fn run(&mut self, i: usize) {
        if i == self.cells.len() {
            if !self.onto || self.missing == 0 {
                (self.visit)(&self.work);
            }
            return;
        }
        if self.onto && self.cells.len() - i < self.missing {
            return;
        }
        let c = self.cells[i];
        let idx = self.work.index(c).expect("cell in range");
        for v in self.lower_bound(c)..=self.max {
            self.work.data[idx] = Some(v);
            if self.onto {
                if self.used[v as usize] == 0 {
                    self.missing -= 1;
                }
                self.used[v as usize] += 1;
            }
            self.run(i + 1);
            if self.onto {
                self.used[v as usize] -= 1;
                if self.used[v as usize] == 0 {
                    self.missing += 1;
                }
            }
        }
        self.work.data[idx] = None;
    }
}

fn search<D: Diagram, F: FnMut(&Tableau<D>)>(shape: &D, max: u32, rule: Rule, onto: bool, visit: &mut F) {
    if onto && (max as usize) > shape.size() {
        return;
    }
    let mut s = Search {
        work: Filling::empty(shape.clone()),
        cells: shape.cells(),
        max,
        rule,
        onto,
        used: vec![0; max as usize + 1],
        missing: max as usize,
        visit,
    };
    s.run(0);
}

/// Visit every semistandard tableau of `shape` with entries in `1..=max`.
pub fn for_each_ssyt<D: Diagram>(shape: &D, max: u32, mut f: impl FnMut(&Tableau<D>)) {
    search(shape, max, Rule::Semistandard, false, &mut f);
}

pub fn enumerate_ssyt<D: Diagram>(shape: &D, max: u32) -> Vec<Tableau<D>> {
    let mut out = Vec::new();
    for_each_ssyt(shape, max, |t| out.push(t.clone()));
    out
}

/// Visit every increasing tableau of `shape` with entries in `1..=max`.
pub fn for_each_increasing<D: Diagram>(shape: &D, max: u32, mut f: impl FnMut(&Tableau<D>)) {
    search(shape, max, Rule::Increasing, false, &mut f);
}

/// Visit every increasing tableau of `shape` whose set of entries is
/// exactly `1..=max`.
pub fn for_each_increasing_onto<D: Diagram>(shape: &D, max: u32, mut f: impl FnMut(&Tableau<D>)) {
    search(shape, max, Rule::Increasing, true, &mut f);
}

pub fn enumerate_increasing<D: Diagram>(shape: &D, max: u32) -> Vec<Tableau<D>> {
    let mut out = Vec::new();
    for_each_increasing(shape, max, |t| out.push(t.clone()));
    out
}
