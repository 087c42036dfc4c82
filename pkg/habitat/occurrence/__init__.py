"""habitat.occurrence.
~~~~~~~~~~~~~~~~~~~~

Resolve a species against the GBIF Backbone Taxonomy and retrieve
filtered, geo-referenced occurrence records.
"""

from .errors import EmptyResult
from .errors import NetworkError
from .errors import NoTaxonMatch
from .errors import OccurrenceError
from .gbif import GBIF_API_URL
from .gbif import PAGE_LIMIT
from .gbif import GbifClient
from .gbif import create_client
from .gbif import deduplicate
from .gbif import parse_occurrence
from .models import MIN_YEAR
from .models import OccurrenceRecord
from .models import TaxonMatch

__all__ = [
    "TaxonMatch",
    "OccurrenceRecord",
    "GbifClient",
    "create_client",
    "parse_occurrence",
    "deduplicate",
    "GBIF_API_URL",
    "PAGE_LIMIT",
    "MIN_YEAR",
    "OccurrenceError",
    "NoTaxonMatch",
    "EmptyResult",
    "NetworkError",
]
