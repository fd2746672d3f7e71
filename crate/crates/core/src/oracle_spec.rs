//! Oracle spec strings such as `random:p=0.5:seed=7` or `stepup:graph=c5.g:red=c2`.
//!
//! | spec | coloring |
//! |---|---|
//! | `const:red`, `const:blue` | every triple one color |
//! | `random:p=<f>[:seed=<u64>]` | red with probability `p` per triple |
//! | `tournament:file=<path>` | cyclic triples of a tournament file are red |
//! | `tournament:random[:seed=<u64>]` | same for a hashed random tournament |
//! | `lift:r=<u>:c1=<path>[:seed=<u64>]` | lift of the pair coloring in `c1` |
//! | `stepup:graph=<path>[:red=c1\|c2\|c3]` | stepping-up over the base graph |
//!
//! Missing seeds are derived from the run seed (`c2` sub-stream for lifts).
//! Without `red=`, stepping-up oracles keep their three colors.

use std::collections::BTreeMap;
use std::fs;

use crate::coloring::{ColorId, EdgeColoring};
use crate::constructions::{LiftColoringSpec, LiftOracle, StepUpOracle};
use crate::error::{Error, Result};
use crate::graph::BitGraph;
use crate::hash;
use crate::oracle::{
    Binarized, ConstOracle, Prefix, RandomOracle, TournamentOracle, TripleColoring,
};
use crate::tournament::{HashTournament, Tournament};

/// Parses `spec` into an oracle on at most `universe` vertices.
///
/// Oracles with an intrinsic size (tournament files, stepping-up) are
/// truncated to `universe` when it is smaller.
pub fn parse_oracle(spec: &str, universe: usize, run_seed: u64) -> Result<Box<dyn TripleColoring>> {
    let err = |msg: &str| Error::OracleSpec {
        spec: spec.to_string(),
        msg: msg.to_string(),
    };
    let mut parts = spec.split(':');
    let kind = parts.next().unwrap_or_default();
    let mut flags = Vec::new();
    let mut kv = BTreeMap::new();
    for p in parts {
        match p.split_once('=') {
            Some((k, v)) => {
                if kv.insert(k, v).is_some() {
                    return Err(err(&format!("key `{k}` repeated")));
                }
            }
            None => flags.push(p),
        }
    }
    let seed_or = |default: u64| -> Result<u64> {
        kv.get("seed")
            .map(|s| s.parse().map_err(|_| err("seed must be a u64")))
            .unwrap_or(Ok(default))
    };
    let check_keys = |allowed: &[&str], allowed_flags: &[&str]| -> Result<()> {
        if let Some(k) = kv.keys().find(|k| !allowed.contains(k)) {
            return Err(err(&format!("unknown key `{k}`")));
        }
        if let Some(f) = flags.iter().find(|f| !allowed_flags.contains(f)) {
            return Err(err(&format!("unexpected `{f}`")));
        }
        Ok(())
    };
    let read =
        |path: &str| fs::read_to_string(path).map_err(|e| err(&format!("cannot read {path}: {e}")));
    Ok(match kind {
        "const" => {
            check_keys(&[], &["red", "blue"])?;
            let color = match flags.as_slice() {
                ["red"] => ColorId::RED,
                ["blue"] => ColorId::BLUE,
                _ => return Err(err("expected const:red or const:blue")),
            };
            Box::new(ConstOracle { n: universe, color })
        }
        "random" => {
            check_keys(&["p", "seed"], &[])?;
            let p: f64 = kv
                .get("p")
                .ok_or_else(|| err("missing p"))?
                .parse()
                .map_err(|_| err("p must be a number"))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(err("p must lie in [0, 1]"));
            }
            Box::new(RandomOracle {
                n: universe,
                p,
                seed: seed_or(hash::substream(run_seed, "oracle"))?,
            })
        }
        "tournament" => {
            check_keys(&["file", "seed"], &["random"])?;
            match (kv.get("file"), flags.as_slice()) {
                (Some(path), []) => {
                    if kv.contains_key("seed") {
                        return Err(err("seed is meaningless with file="));
                    }
                    let t = Tournament::parse(&read(path)?)?;
                    Box::new(Prefix {
                        inner: TournamentOracle::new(t),
                        n: universe,
                    })
                }
                (None, ["random"]) => Box::new(TournamentOracle::new(HashTournament::new(
                    universe,
                    seed_or(hash::substream(run_seed, "tournament"))?,
                ))),
                _ => return Err(err("expected tournament:file=<path> or tournament:random")),
            }
        }
        "lift" => {
            check_keys(&["r", "c1", "seed"], &[])?;
            let c1 = EdgeColoring::parse(&read(kv.get("c1").ok_or_else(|| err("missing c1"))?)?)?;
            if let Some(r) = kv.get("r") {
                let r: usize = r.parse().map_err(|_| err("r must be an integer"))?;
                if r != c1.n() {
                    return Err(err(&format!("r = {r} but c1 colors pairs of [{}]", c1.n())));
                }
            }
            let spec_ = LiftColoringSpec::new(c1, seed_or(hash::substream(run_seed, "c2"))?)?;
            Box::new(LiftOracle {
                n: universe,
                spec: spec_,
            })
        }
        "stepup" => {
            check_keys(&["graph", "red"], &[])?;
            let g = BitGraph::parse(&read(kv.get("graph").ok_or_else(|| err("missing graph"))?)?)?;
            let inner = Prefix {
                inner: StepUpOracle::new(g)?,
                n: universe,
            };
            match kv.get("red") {
                None => Box::new(inner),
                Some(c) => {
                    let target = match c.to_ascii_lowercase().as_str() {
                        "c1" | "1" => ColorId::C1,
                        "c2" | "2" => ColorId::C2,
                        "c3" | "3" => ColorId::C3,
                        _ => return Err(err("red must be c1, c2 or c3")),
                    };
                    Box::new(Binarized { inner, target })
                }
            }
        }
        _ => return Err(err("unknown oracle kind")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_kinds() {
        let o = parse_oracle("const:red", 10, 0).unwrap();
        assert_eq!(o.universe(), 10);
        assert_eq!(o.color(0, 1, 2), ColorId::RED);
        let a = parse_oracle("random:p=0.5:seed=4", 50, 0).unwrap();
        let b = parse_oracle("random:p=0.5", 50, 99).unwrap();
        let c = parse_oracle("random:p=0.5", 50, 99).unwrap();
        let same = |x: &dyn TripleColoring, y: &dyn TripleColoring| {
            (0..48).all(|i| x.color(i, i + 1, i + 2) == y.color(i, i + 1, i + 2))
        };
        assert!(same(b.as_ref(), c.as_ref()));
        assert!(!same(a.as_ref(), b.as_ref()));
        let t = parse_oracle("tournament:random:seed=3", 64, 0).unwrap();
        assert_eq!(t.palette(), 2);
    }

    #[test]
    fn file_kinds() {
        let dir = std::env::temp_dir().join(format!("oracle-spec-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let g = dir.join("c5.g");
        fs::write(&g, BitGraph::cycle(5).to_text()).unwrap();
        let spec = format!("stepup:graph={}", g.display());
        let o = parse_oracle(&spec, 1 << 20, 0).unwrap();
        assert_eq!((o.universe(), o.palette()), (32, 3));
        let o = parse_oracle(&format!("{spec}:red=c2"), 16, 0).unwrap();
        assert_eq!((o.universe(), o.palette()), (16, 2));

        let c1 = dir.join("pentagon.g");
        fs::write(&c1, BitGraph::cycle(5).to_text()).unwrap();
        let o = parse_oracle(&format!("lift:r=5:c1={}:seed=1", c1.display()), 100, 0).unwrap();
        assert_eq!(o.universe(), 100);
        assert!(parse_oracle(&format!("lift:r=4:c1={}", c1.display()), 100, 0).is_err());

        let t = dir.join("rot5.t");
        fs::write(&t, Tournament::rotational(5, 2).to_text()).unwrap();
        let o = parse_oracle(&format!("tournament:file={}", t.display()), 100, 0).unwrap();
        assert_eq!(o.universe(), 5);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "",
            "const",
            "const:green",
            "random",
            "random:p=2",
            "random:p=0.5:seed=x",
            "random:p=0.5:q=1",
            "random:p=0.5:p=0.4",
            "tournament",
            "lift:r=5",
            "stepup:graph=/nonexistent",
            "wat:x=1",
        ] {
            assert!(
                matches!(
                    parse_oracle(bad, 10, 0),
                    Err(Error::OracleSpec { .. } | Error::Parse { .. })
                ),
                "{bad}"
            );
        }
    }
}
