use std::fmt;

use serde::Serialize;

use super::CactusAux;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    Unlabeled,
    /// Monochromatic.
    M,
    /// Polychromatic.
    P,
}

/// Number of colors the labeling must be realisable with. `Many` drops the
/// odd-cycle test, which only matters with two colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Palette {
    Two,
    Many,
}

/// An `{M, P}` labeling of the auxiliary graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleLabeling {
    pub x: Label,
    /// Label of `v_i`, per cycle.
    pub cycles: Vec<Label>,
    /// Label of `w_i` where present.
    pub w: Vec<Option<Label>>,
    /// Passes of the repeat loop that were needed.
    pub passes: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RejectReason {
    /// Some vertex lies on no cycle.
    UncoveredVertex,
    /// Two cycles with cycle-simplicial vertices share a vertex.
    TwoSimplicialCyclesTouch,
    /// An odd cycle was labeled polychromatic with only two colors.
    OddPCycle,
    /// Every cycle through some vertex is polychromatic.
    AllPClique,
    /// Two monochromatic cycles share a vertex.
    AdjacentM,
}

impl RejectReason {
    pub fn code(self) -> &'static str {
        match self {
            RejectReason::UncoveredVertex => "UNCOVERED_VERTEX",
            RejectReason::TwoSimplicialCyclesTouch => "TWO_SIMPLICIAL_CYCLES_TOUCH",
            RejectReason::OddPCycle => "ODD_P_CYCLE",
            RejectReason::AllPClique => "ALL_P_CLIQUE",
            RejectReason::AdjacentM => "ADJACENT_M",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Why a cactus has no labeling, with the vertex or cycle that triggered it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub reason: RejectReason,
    pub vertex: Option<usize>,
    pub cycle: Option<usize>,
}

/// Runs the labeling with the repeat loop scanning vertices in ascending
/// order.
pub fn cactus_label(aux: &CactusAux, palette: Palette) -> Result<CycleLabeling, Rejection> {
    let order: Vec<usize> = (0..aux.n).collect();
    cactus_label_with_order(aux, palette, &order)
}

/// As [`cactus_label`], with the repeat loop visiting the cliques `U_j` in
/// the order given by `order`, a permutation of `0..n`.
pub fn cactus_label_with_order(
    aux: &CactusAux,
    palette: Palette,
    order: &[usize],
) -> Result<CycleLabeling, Rejection> {
    assert_eq!(
        order.len(),
        aux.n,
        "scan order must be a permutation of the vertices"
    );
    if let Some(j) = aux.cliques.iter().position(Vec::is_empty) {
        return Err(Rejection {
            reason: RejectReason::UncoveredVertex,
            vertex: Some(j),
            cycle: None,
        });
    }
    let mut st = State::new(aux, palette);

    let mut w = vec![None; aux.cycle_count()];
    for (i, wi) in w.iter_mut().enumerate() {
        if aux.has_simplicial[i] {
            *wi = Some(Label::P);
            st.set(i, Label::M);
            st.sub_m(i).map_err(|mut r| {
                r.reason = RejectReason::TwoSimplicialCyclesTouch;
                r
            })?;
        }
    }

    let mut passes = 0;
    while st.unlabeled > 0 {
        let before = st.unlabeled;
        passes += 1;
        for &j in order {
            let clique = &aux.cliques[j];
            if st.m_count[j] > 0 && st.open_count[j] > 0 {
                let m = st.first_unlabeled(clique);
                st.set(m, Label::P);
                st.sub_p(m)?;
                continue;
            }
            if st.open_count[j] == 1 && st.p_count[j] + 1 == clique.len() {
                let m = st.first_unlabeled(clique);
                st.set(m, Label::M);
                st.sub_m(m)?;
            }
        }
        assert!(
            st.unlabeled < before,
            "a pass of the repeat loop labeled no cycle"
        );
    }
    Ok(CycleLabeling {
        x: Label::M,
        cycles: st.labels,
        w,
        passes,
    })
}

struct State<'a> {
    aux: &'a CactusAux,
    palette: Palette,
    labels: Vec<Label>,
    unlabeled: usize,
    /// Per original vertex: cycles through it labeled M, P, or not at all.
    m_count: Vec<usize>,
    p_count: Vec<usize>,
    open_count: Vec<usize>,
}

impl<'a> State<'a> {
    fn new(aux: &'a CactusAux, palette: Palette) -> Self {
        Self {
            aux,
            palette,
            labels: vec![Label::Unlabeled; aux.cycle_count()],
            unlabeled: aux.cycle_count(),
            m_count: vec![0; aux.n],
            p_count: vec![0; aux.n],
            open_count: aux.cliques.iter().map(Vec::len).collect(),
        }
    }

    fn set(&mut self, i: usize, label: Label) {
        debug_assert_eq!(self.labels[i], Label::Unlabeled);
        self.labels[i] = label;
        self.unlabeled -= 1;
        for &u in &self.aux.cycles[i] {
            self.open_count[u] -= 1;
            match label {
                Label::M => self.m_count[u] += 1,
                Label::P => self.p_count[u] += 1,
                Label::Unlabeled => unreachable!(),
            }
        }
    }

    fn first_unlabeled(&self, clique: &[usize]) -> usize {
        *clique
            .iter()
            .find(|&&i| self.labels[i] == Label::Unlabeled)
            .expect("clique has an open cycle")
    }

    fn sub_m(&self, i: usize) -> Result<(), Rejection> {
        match self.aux.cycle_adj[i]
            .iter()
            .find(|&&j| self.labels[j] == Label::M)
        {
            Some(&j) => Err(Rejection {
                reason: RejectReason::AdjacentM,
                vertex: None,
                cycle: Some(j),
            }),
            None => Ok(()),
        }
    }

    /// Only cliques through cycle `i` can have become all-P, so only those
    /// are checked.
    fn sub_p(&self, i: usize) -> Result<(), Rejection> {
        let cycle = &self.aux.cycles[i];
        if self.palette == Palette::Two && cycle.len() % 2 == 1 {
            return Err(Rejection {
                reason: RejectReason::OddPCycle,
                vertex: None,
                cycle: Some(i),
            });
        }
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        match sorted
            .into_iter()
            .find(|&u| self.p_count[u] == self.aux.cliques[u].len())
        {
            Some(u) => Err(Rejection {
                reason: RejectReason::AllPClique,
                vertex: Some(u),
                cycle: Some(i),
            }),
            None => Ok(()),
        }
    }
}
