from habitat.common.errors import NumericalError


class DiscoveryError(NumericalError):
    error = "discovery_error"


class NonSquare(DiscoveryError):
    error = "non_square"

    def __init__(self, shape):
        super().__init__(description=f"expected a square matrix, got shape {shape}")


class DegenerateData(DiscoveryError):
    error = "degenerate_data"


class DidNotConverge(DiscoveryError):
    error = "did_not_converge"

    def __init__(self, h, rho):
        self.h = h
        self.rho = rho
        super().__init__(description=f"acyclicity h={h:.3e} with rho={rho:.1e} exhausted")


class CycleDetected(DiscoveryError):
    error = "cycle_detected"

    def __init__(self, cycle):
        self.cycle = cycle
        super().__init__(description=f"graph has a cycle through {cycle}")
