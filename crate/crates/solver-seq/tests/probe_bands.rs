//! Temporary census: band depths and middle-region cover after adjustment.

use grid_core::{upper_bound, v, Rect};
use solver_seq::{adjust_peeling, find_junctions, peel, trisect};

#[test]
fn census_band_depth_and_middle_cover() {
    let mut thin_bands = 0u64;
    let mut rm_partial = 0u64;
    let mut rs_partial = 0u64;
    let mut rt_partial = 0u64;
    let mut junction_total = 0u64;
    let mut examples: Vec<String> = Vec::new();
    for m in 4..=12i32 {
        for n in 4..=m {
            let rect = Rect::new(m, n);
            for sy in 1..=n {
                for sx in 1..=m {
                    for ty in 1..=n {
                        for tx in 1..=m {
                            let s = v(sx, sy);
                            let t = v(tx, ty);
                            if s == t || s.x > t.x || (s.x == t.x && s.y > t.y) {
                                continue;
                            }
                            let p0 = peel(rect, s, t);
                            let Ok(p) = adjust_peeling(p0, rect, s, t) else { continue };
                            for band in [&p.r1, &p.r2, &p.r3, &p.r4] {
                                if band.size() > 0 && (band.m == 1 || band.n == 1) {
                                    thin_bands += 1;
                                    if examples.len() < 12 {
                                        examples.push(format!(
                                            "thin band {m}x{n} s={sx},{sy} t={tx},{ty} band={band:?}"
                                        ));
                                    }
                                }
                            }
                            let r5 = p.r5;
                            let ls = r5.to_local(s);
                            let lt = r5.to_local(t);
                            if r5.m.min(r5.n) <= 3 || r5.m.max(r5.n) <= 3 {
                                continue;
                            }
                            let tri = trisect(Rect::new(r5.m, r5.n), ls, lt);
                            let lr5 = Rect::new(r5.m, r5.n);
                            let Some(j) = find_junctions(&tri, lr5, ls, lt) else { continue };
                            junction_total += 1;
                            let rs = tri.rs;
                            let rm = tri.rm;
                            let rt = tri.rt;
                            let us = upper_bound(Rect::new(rs.m, rs.n), rs.to_local(ls), rs.to_local(j.p));
                            if us < rs.size() {
                                rs_partial += 1;
                            }
                            let ut = upper_bound(Rect::new(rt.m, rt.n), rt.to_local(j.q), rt.to_local(lt));
                            if ut < rt.size() {
                                rt_partial += 1;
                            }
                            if rm.size() > 0 {
                                let um = upper_bound(
                                    Rect::new(rm.m, rm.n),
                                    rm.to_local(j.m_enter.unwrap()),
                                    rm.to_local(j.m_exit.unwrap()),
                                );
                                if um < rm.size() {
                                    rm_partial += 1;
                                    let depth = rm.m.min(rm.n);
                                    if depth > 2 && examples.len() < 24 {
                                        examples.push(format!(
                                            "DEEP rm partial {m}x{n} s={sx},{sy} t={tx},{ty} um={um} sz={} rm={rm:?}",
                                            rm.size()
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    println!("junction_total {junction_total}");
    println!("thin_bands {thin_bands} rm_partial {rm_partial} rs_partial {rs_partial} rt_partial {rt_partial}");
    for e in &examples {
        println!("  {e}");
    }
}
