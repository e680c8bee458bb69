//! Product checks over ordered pairs of small factor graphs.

use burngame::generators::{cartesian, corona, lexicographic, parse_graph_expr, strong};
use burngame::Graph;

use crate::catalog::find;
use crate::check::{to_results, Assertion};
use crate::facts::Facts;
use crate::report::{CheckResult, Relation};

/// Largest product the sweep hands to the exact solver.
pub const MAX_PRODUCT_ORDER: usize = 20;

/// The default factor set, as graph expressions.
pub const DEFAULT_FACTORS: &[&str] = &["complete:2", "path:3", "path:4", "cycle:3", "cycle:4", "star:3"];

pub const PRODUCT_CHECKS: &[&str] = &["prop-6.1", "prop-6.3", "prop-6.4", "prop-6.4-no-universal"];

pub struct Factor {
    pub name: String,
    pub facts: Facts,
}

impl Factor {
    pub fn parse(expr: &str) -> Result<Factor, burngame::GraphError> {
        Ok(Factor {
            name: expr.to_string(),
            facts: Facts::new(parse_graph_expr(expr)?),
        })
    }
}

fn starters() -> [(burngame::Player, &'static str); 2] {
    [(burngame::Player::Burner, "b_g"), (burngame::Player::Staller, "b_g'")]
}

fn build(f: fn(&Graph, &Graph) -> Result<Graph, burngame::GraphError>, g: &Factor, h: &Factor) -> Option<Facts> {
    f(&g.facts.g, &h.facts.g)
        .ok()
        .filter(|p| p.order() <= MAX_PRODUCT_ORDER)
        .map(Facts::new)
}

fn pair_params(a: Assertion, g: &Factor, h: &Factor) -> Assertion {
    a.param("g", g.name.as_str()).param("h", h.name.as_str())
}

/// Evaluates one product check on the ordered pair `(g, h)`; `None` when the
/// pair is outside the check's scope (order cap or hypotheses).
pub fn evaluate_pair(check_id: &str, g: &Factor, h: &Factor) -> Option<Vec<CheckResult>> {
    let def = find(check_id)?;
    let connected = g.facts.g.is_connected() && h.facts.g.is_connected();
    let h_universal = !h.facts.g.universal_vertices().is_empty();
    match check_id {
        "prop-6.1" => {
            let sp = build(strong, g, h)?;
            let cp = build(cartesian, g, h)?;
            let mut out = vec![];
            for (p, name) in starters() {
                let floor = g.facts.game(p).max(h.facts.game(p));
                out.push(
                    pair_params(
                        Assertion::new(
                            format!("max({name}(G),{name}(H)) <= {name}(G strong H)"),
                            floor,
                            Relation::Le,
                            sp.game(p),
                        ),
                        g,
                        h,
                    )
                    .value("cartesian", cp.game(p) as i64),
                );
                out.push(
                    pair_params(
                        Assertion::new(
                            format!("{name}(G strong H) <= {name}(G cartesian H)"),
                            sp.game(p),
                            Relation::Le,
                            cp.game(p),
                        ),
                        g,
                        h,
                    )
                    .value("strong", sp.game(p) as i64),
                );
            }
            let subject = format!("strong({},{})", g.name, h.name);
            Some(to_results(def, &sp, &subject, out))
        }
        "prop-6.3" => {
            if !connected {
                return None;
            }
            let c = build(corona, g, h)?;
            let bsq = g.facts.b_square();
            let mut out = vec![];
            for (p, name) in starters() {
                out.push(
                    pair_params(
                        Assertion::new(
                            format!("2b(G^2)-1 <= {name}(G corona H)"),
                            2 * bsq - 1,
                            Relation::Le,
                            c.game(p),
                        ),
                        g,
                        h,
                    )
                    .value("b_g_square", bsq as i64),
                );
                out.push(
                    pair_params(
                        Assertion::new(
                            format!("{name}(G corona H) <= 2b(G^2)"),
                            c.game(p),
                            Relation::Le,
                            2 * bsq,
                        ),
                        g,
                        h,
                    )
                    .value("b_g_square", bsq as i64),
                );
            }
            Some(to_results(def, &c, &format!("corona({},{})", g.name, h.name), out))
        }
        "prop-6.4" | "prop-6.4-no-universal" => {
            if !connected || h_universal != (check_id == "prop-6.4") {
                return None;
            }
            let l = build(lexicographic, g, h)?;
            let mut out = vec![];
            for (p, name) in starters() {
                let (lo, hi) = if h_universal {
                    (g.facts.game(p), g.facts.game(p) + 1)
                } else {
                    (2 * g.facts.b_square(), 2 * g.facts.b_square() + 1)
                };
                let what = if h_universal {
                    format!("{name}(G)")
                } else {
                    "2b(G^2)".to_string()
                };
                out.push(pair_params(
                    Assertion::new(format!("{what} <= {name}(G[H])"), lo, Relation::Le, l.game(p)),
                    g,
                    h,
                ));
                out.push(pair_params(
                    Assertion::new(format!("{name}(G[H]) <= {what}+1"), l.game(p), Relation::Le, hi),
                    g,
                    h,
                ));
            }
            Some(to_results(
                def,
                &l,
                &format!("lexicographic({},{})", g.name, h.name),
                out,
            ))
        }
        _ => None,
    }
}

/// Every product check in `ids` on every ordered pair of factors.
pub fn product_sweep(factors: &[&str], ids: &[&str]) -> Result<Vec<CheckResult>, burngame::GraphError> {
    let factors: Vec<Factor> = factors.iter().map(|f| Factor::parse(f)).collect::<Result<_, _>>()?;
    let mut out = vec![];
    for id in ids {
        for g in &factors {
            for h in &factors {
                out.extend(evaluate_pair(id, g, h).unwrap_or_default());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn f(expr: &str) -> Factor {
        Factor::parse(expr).unwrap()
    }

    #[test]
    fn corona_k2_k2() {
        let r = evaluate_pair("prop-6.3", &f("complete:2"), &f("complete:2")).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r[0].lhs, Some(3));
        assert_eq!(r[1].rhs, Some(4));
        assert!(r.iter().all(|x| x.status == Status::Pass));
    }

    #[test]
    fn lexicographic_p3_k2() {
        let r = evaluate_pair("prop-6.4", &f("path:3"), &f("complete:2")).unwrap();
        assert!(r.iter().all(|x| x.status == Status::Pass));
        assert!(evaluate_pair("prop-6.4", &f("path:3"), &f("cycle:4")).is_none());
    }

    #[test]
    fn order_cap_excludes_large_pairs() {
        assert!(evaluate_pair("prop-6.3", &f("path:4"), &f("star:3")).is_some());
        assert!(evaluate_pair("prop-6.3", &f("path:5"), &f("path:4")).is_none());
        assert!(evaluate_pair("prop-6.1", &f("path:5"), &f("path:5")).is_none());
    }

    #[test]
    fn missing_universal_half_fails_on_k2_c4() {
        let r = evaluate_pair("prop-6.4-no-universal", &f("complete:2"), &f("cycle:4")).unwrap();
        assert!(r.iter().all(|x| x.exploratory));
        // b_g(K_2[C_4]) = 2 < 4 = 2b(K_2^2)
        assert_eq!((r[0].lhs, r[0].rhs, r[0].status), (Some(4), Some(2), Status::Fail));
    }
}
