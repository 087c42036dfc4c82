from habitat.client import NetworkError
from habitat.common.errors import UpstreamDataError

__all__ = ["OccurrenceError", "NoTaxonMatch", "EmptyResult", "NetworkError"]


class OccurrenceError(UpstreamDataError):
    error = "occurrence_error"


class NoTaxonMatch(OccurrenceError):
    error = "no_taxon_match"

    def __init__(self, name, match_type="NONE"):
        self.name = name
        self.match_type = match_type
        description = f'GBIF Backbone has no species match for "{name}" ({match_type})'
        super().__init__(description=description)


class EmptyResult(OccurrenceError):
    error = "empty_result"

    def __init__(self, taxon):
        self.taxon = taxon
        description = f"no usable occurrence records for taxon {taxon.usage_key}"
        super().__init__(description=description)
