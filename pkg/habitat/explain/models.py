from dataclasses import asdict
from dataclasses import dataclass

SOURCE_RULE = "rule"
SOURCE_LLM = "llm"


@dataclass
class Explanation:
    """Plain-language reading of one effect. ``rule_text`` is always set;
    ``llm_text`` augments it when an LLM answered.
    """

    variable: str
    long_name: str
    rule_text: str
    ate: float
    band: str
    llm_text: str = None
    source: str = SOURCE_RULE

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)
