"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid inverter/objective/optimizer configuration or dimension mismatch."""


class SingularCircuitError(ConfigError):
    """Total series resistance is zero where a current must be solved."""


class DegenerateWaveformError(ValueError):
    """Waveform has no fundamental component; THD is undefined."""


class ProtocolError(RuntimeError):
    """ask/tell called out of order or with an unknown candidate id."""


class ScenarioError(ValueError):
    """Scenario document is malformed or violates an invariant."""


class SearchExhausted(Exception):
    """The optimizer has stopped; no further candidates will be issued.

    Carries the best solution found so far.
    """

    def __init__(self, reason, best_angles, best_fitness):
        super().__init__(f"search exhausted ({reason})")
        self.reason = reason  # "budget" or "stagnation"
        self.best_angles = best_angles
        self.best_fitness = best_fitness
