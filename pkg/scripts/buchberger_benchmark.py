"""Time Buchberger's algorithm on seeded random presentations.

Each instance runs under a wall-clock limit; reports timeouts, run times
and basis sizes.
"""

import random
import signal
import statistics
import time
from dataclasses import dataclass

from _config import parse_config
from randgen import random_element

from weylmod.groebner import buchberger
from weylmod.module import FreeModule
from weylmod.notation import format_element


@dataclass
class Config:
    seed: int = 12345
    instances: int = 50
    max_terms: int = 3
    max_deg: int = 3
    max_rels: int = 3
    selection: str = "fifo"
    timeout: int = 30


class Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise Timeout


def main(cfg: Config) -> None:
    signal.signal(signal.SIGALRM, _alarm)
    rng = random.Random(cfg.seed)
    times, sizes, timeouts = [], [], 0
    for k in range(cfg.instances):
        E = FreeModule(rng.randint(1, 2), rng.randint(1, 2))
        rels = [
            random_element(rng, E, cfg.max_deg, cfg.max_terms, rational=False)
            for _ in range(rng.randint(1, cfg.max_rels))
        ]
        signal.alarm(cfg.timeout)
        t0 = time.perf_counter()
        try:
            G = buchberger(rels, selection=cfg.selection)
        except Timeout:
            timeouts += 1
            print(f"instance {k}: timeout; relations {[format_element(r) for r in rels]}")
            continue
        finally:
            signal.alarm(0)
        times.append(time.perf_counter() - t0)
        sizes.append(len(G))
    print(f"{cfg.instances} instances ({cfg.selection}): {timeouts} timeouts")
    if times:
        print(f"time total {sum(times):.2f} s, median {statistics.median(times):.4f} s, max {max(times):.2f} s")
        print(f"basis size median {statistics.median(sizes)}, max {max(sizes)}")


if __name__ == "__main__":
    main(parse_config(Config, __doc__.splitlines()[0]))
