//! Lazily computed, cached parameters of one graph.

use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;

use burngame::classical::{burning_number, gamma_k};
use burngame::engine::{principal_variation, GameSolver, Player, SoloSolver};
use burngame::graph6::emit_graph6;
use burngame::{Graph, VertexSet};

use crate::report::TraceRecord;

pub struct Facts {
    pub g: Graph,
    graph6: OnceCell<String>,
    bg: OnceCell<usize>,
    bg_prime: OnceCell<usize>,
    b: OnceCell<usize>,
    b_square: OnceCell<usize>,
    cl: OnceCell<usize>,
    burner_only: OnceCell<usize>,
    gamma: RefCell<BTreeMap<usize, usize>>,
    complement: OnceCell<Box<Facts>>,
    /// One memo table shared by every relative game on this graph.
    solver: RefCell<Option<GameSolver>>,
}

impl Facts {
    pub fn new(g: Graph) -> Self {
        Facts {
            g,
            graph6: OnceCell::new(),
            bg: OnceCell::new(),
            bg_prime: OnceCell::new(),
            b: OnceCell::new(),
            b_square: OnceCell::new(),
            cl: OnceCell::new(),
            burner_only: OnceCell::new(),
            gamma: RefCell::new(BTreeMap::new()),
            complement: OnceCell::new(),
            solver: RefCell::new(None),
        }
    }

    pub fn n(&self) -> usize {
        self.g.order()
    }

    pub fn graph6(&self) -> &str {
        self.graph6.get_or_init(|| emit_graph6(&self.g))
    }

    pub fn bg(&self) -> usize {
        *self.bg.get_or_init(|| self.relative(VertexSet::EMPTY, Player::Burner))
    }

    pub fn bg_prime(&self) -> usize {
        *self
            .bg_prime
            .get_or_init(|| self.relative(VertexSet::EMPTY, Player::Staller))
    }

    pub fn game(&self, p: Player) -> usize {
        match p {
            Player::Burner => self.bg(),
            Player::Staller => self.bg_prime(),
        }
    }

    /// b_g(G|B) (or its Staller-start version), cached per start set.
    pub fn relative(&self, b0: VertexSet, p: Player) -> usize {
        let mut solver = self.solver.borrow_mut();
        solver.get_or_insert_with(|| GameSolver::new(&self.g)).value(b0, p)
    }

    pub fn b(&self) -> usize {
        *self.b.get_or_init(|| burning_number(&self.g).0)
    }

    pub fn b_square(&self) -> usize {
        *self.b_square.get_or_init(|| burning_number(&self.g.square()).0)
    }

    /// Cooling number, read as the Staller-only game value.
    pub fn cl(&self) -> usize {
        *self
            .cl
            .get_or_init(|| SoloSolver::new(&self.g, Player::Staller).value(VertexSet::EMPTY))
    }

    pub fn burner_only(&self) -> usize {
        *self
            .burner_only
            .get_or_init(|| SoloSolver::new(&self.g, Player::Burner).value(VertexSet::EMPTY))
    }

    pub fn gamma(&self, k: usize) -> usize {
        *self.gamma.borrow_mut().entry(k).or_insert_with(|| gamma_k(&self.g, k))
    }

    pub fn complement(&self) -> &Facts {
        self.complement
            .get_or_init(|| Box::new(Facts::new(self.g.complement())))
    }

    /// Principal variations of both starting games, for witnesses.
    pub fn traces(&self) -> Vec<TraceRecord> {
        [Player::Burner, Player::Staller]
            .into_iter()
            .map(|p| {
                let (value, trace) = principal_variation(&self.g, VertexSet::EMPTY, p);
                TraceRecord::new(&self.g, value, &trace)
            })
            .collect()
    }

    /// Every value computed so far, keyed by a short name.
    pub fn snapshot(&self) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        let mut put = |k: &str, v: Option<&usize>| {
            if let Some(&v) = v {
                out.insert(k.to_string(), v as i64);
            }
        };
        put("bg", self.bg.get());
        put("bg_prime", self.bg_prime.get());
        put("b", self.b.get());
        put("b_square", self.b_square.get());
        put("cl", self.cl.get());
        put("burner_only", self.burner_only.get());
        for (k, v) in self.gamma.borrow().iter() {
            out.insert(format!("gamma_{k}"), *v as i64);
        }
        if let Some(c) = self.complement.get() {
            for (k, v) in c.snapshot() {
                out.insert(format!("complement.{k}"), v);
            }
        }
        out
    }
}
