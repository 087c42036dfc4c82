from habitat.common.errors import NumericalError


class InferenceError(NumericalError):
    error = "inference_error"


class ConstantOutcome(InferenceError):
    error = "constant_outcome"
    description = "Presence labels are all equal; nothing to rank or estimate."


class UnknownNode(InferenceError):
    error = "unknown_node"

    def __init__(self, node):
        self.node = node
        super().__init__(description=f'"{node}" is not a node of the graph')


class BackdoorViolation(InferenceError):
    error = "backdoor_violation"


class NoVariation(InferenceError):
    error = "no_variation"
    description = "Treatment vector holds a single class."


class Separation(InferenceError):
    error = "separation"
    description = "Propensity model separates the treatment groups perfectly."


class AllStrataDropped(InferenceError):
    error = "all_strata_dropped"
    description = "No propensity stratum contains both treated and control units."


class TooFewSamples(InferenceError):
    error = "too_few_samples"
