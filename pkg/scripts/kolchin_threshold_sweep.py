"""Where does the Kolchin polynomial start counting lattice points?

For random point sets A in N^m this finds the first s from which
omega_A(s) equals the direct count, and compares it with two candidate
starting points: the largest coordinate sum of a point of A, and
|join of the minimal points| - m.
"""

import random
from collections import Counter
from dataclasses import dataclass

from _config import parse_config
from randgen import random_point_set

from weylmod.numpoly import count_v_points, kolchin_polynomial, kolchin_threshold


@dataclass
class Config:
    seed: int = 0
    sets: int = 200
    max_dim: int = 6
    max_coord: int = 5
    max_points: int = 5
    window: int = 11


def first_stable(A, omega, top: int) -> int:
    # smallest s such that omega agrees with the count on [s, top]
    s = top
    while s > 0 and omega(s - 1) == count_v_points(A, s - 1):
        s -= 1
    return s


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    literal_bad = corrected_bad = 0
    gaps = Counter()
    for k in range(cfg.sets):
        A = random_point_set(rng, cfg.max_dim, cfg.max_coord, cfg.max_points)
        omega = kolchin_polynomial(A)
        s_lit, s_cor = A.max_norm(), kolchin_threshold(A)
        lit_ok = all(omega(s) == count_v_points(A, s) for s in range(s_lit, s_lit + cfg.window))
        cor_ok = all(omega(s) == count_v_points(A, s) for s in range(s_cor, s_cor + cfg.window))
        literal_bad += not lit_ok
        corrected_bad += not cor_ok
        stable = first_stable(A, omega, max(s_lit, s_cor) + cfg.window - 1)
        gaps[s_cor - stable] += 1
        if not lit_ok:
            print(
                f"set {k}: m={A.dim} points={sorted(A.points)} max|a|={s_lit} "
                f"|join|-m={s_cor} first agreeing s={stable}"
            )
    print(f"{cfg.sets} sets: window from max|a| failed {literal_bad}, from |join|-m failed {corrected_bad}")
    print("(|join|-m) minus first agreeing s, histogram:", dict(sorted(gaps.items())))


if __name__ == "__main__":
    main(parse_config(Config, __doc__.splitlines()[0]))
