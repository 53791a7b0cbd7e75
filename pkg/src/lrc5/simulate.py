"""Monte Carlo erasure and repair simulation over a constructed code.

Each trial encodes a seeded random message, erases symbols per the chosen
model, applies the repair policy, and tallies per-symbol and per-trial
outcomes. Everything is driven by one splitmix64 stream, so a (config,
seed) pair fixes the entire run.
"""

from dataclasses import dataclass

from .codec import _local_pass, encode, erasure_decode, erasure_positions
from .construct import Code
from .errors import AmbiguousErasuresError, TooManyErasuresError
from .rng import SplitMix64, RNG_NAME

MODELS = ("fixed", "bernoulli")
POLICIES = ("local-only", "hybrid")


@dataclass(frozen=True)
class SimulationConfig:
    model: str
    trials: int
    seed: int
    policy: str
    t: int | None = None
    rho: float | None = None

    def validate(self, n: int) -> None:
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}")
        if self.policy not in POLICIES:
            raise ValueError(f"policy must be one of {POLICIES}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.model == "fixed":
            if self.t is None or not 0 <= self.t <= n:
                raise ValueError(f"fixed model needs an erasure count t in [0, {n}]")
        else:
            if self.rho is None or not 0.0 <= self.rho <= 1.0:
                raise ValueError("bernoulli model needs a probability rho in [0, 1]")

    def to_json_dict(self) -> dict:
        return {
            "model": self.model,
            "t": self.t,
            "rho": self.rho,
            "trials": self.trials,
            "seed": self.seed,
            "policy": self.policy,
        }


@dataclass
class SimulationResult:
    config: SimulationConfig
    trials: int
    erased_symbols: int
    locally_repaired: int
    globally_repaired: int
    symbols_read: int
    fully_recovered_trials: int
    erasures_per_cell_histogram: dict[int, int]

    @property
    def local_repair_success_rate(self) -> float | None:
        if self.erased_symbols == 0:
            return None
        return self.locally_repaired / self.erased_symbols

    @property
    def overall_recovery_rate(self) -> float:
        return self.fully_recovered_trials / self.trials

    @property
    def mean_reads_per_repaired_symbol(self) -> float | None:
        repaired = self.locally_repaired + self.globally_repaired
        if repaired == 0:
            return None
        return self.symbols_read / repaired

    def to_json_dict(self) -> dict:
        return {
            "rng": RNG_NAME,
            "config": self.config.to_json_dict(),
            "results": {
                "trials": self.trials,
                "erased_symbols": self.erased_symbols,
                "locally_repaired": self.locally_repaired,
                "globally_repaired": self.globally_repaired,
                "symbols_read": self.symbols_read,
                "fully_recovered_trials": self.fully_recovered_trials,
                "local_repair_success_rate": self.local_repair_success_rate,
                "overall_recovery_rate": self.overall_recovery_rate,
                "mean_reads_per_repaired_symbol": self.mean_reads_per_repaired_symbol,
                "erasures_per_cell_histogram": {
                    str(c): v
                    for c, v in sorted(self.erasures_per_cell_histogram.items())
                },
            },
        }


def run_simulation(code: Code, config: SimulationConfig) -> SimulationResult:
    config.validate(code.n)
    field = code.field
    g_rows = code.generator_matrix
    h_rows = code.parity_check_matrix if config.policy == "hybrid" else None
    rng = SplitMix64(config.seed)
    q, n, k = field.q, code.n, code.k
    threshold = int(config.rho * (1 << 64)) if config.model == "bernoulli" else 0
    erased_total = 0
    local_total = 0
    global_total = 0
    reads_total = 0
    recovered_trials = 0
    hist: dict[int, int] = {}
    for _ in range(config.trials):
        msg = [rng.randbelow(q) for _ in range(k)]
        cw = encode(field, g_rows, msg)
        if config.model == "fixed":
            pattern = rng.sample_sorted(n, config.t)
        else:
            pattern = [i for i in range(n) if rng.next_u64() < threshold]
        erased_total += len(pattern)
        pattern_set = set(pattern)
        for cell in code.domain.cells:
            c = sum(1 for pos in cell if pos in pattern_set)
            hist[c] = hist.get(c, 0) + 1
        work: list[int | None] = list(cw)
        for pos in pattern:
            work[pos] = None
        repaired, reads = _local_pass(code, work)
        local_total += len(repaired)
        reads_total += reads
        remaining = erasure_positions(work)
        recovered = not remaining
        if remaining and config.policy == "hybrid":
            try:
                work = erasure_decode(field, h_rows, work)
                global_total += len(remaining)
                reads_total += n - len(remaining)
                recovered = True
            except (AmbiguousErasuresError, TooManyErasuresError):
                recovered = False
        if recovered and work == cw:
            recovered_trials += 1
    return SimulationResult(
        config=config,
        trials=config.trials,
        erased_symbols=erased_total,
        locally_repaired=local_total,
        globally_repaired=global_total,
        symbols_read=reads_total,
        fully_recovered_trials=recovered_trials,
        erasures_per_cell_histogram=hist,
    )
