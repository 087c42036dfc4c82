"""habitat.occurrence.gbif.
~~~~~~~~~~~~~~~~~~~~~~~~~

GBIF Backbone Taxonomy matching and occurrence search.

https://techdocs.gbif.org/en/openapi/v1/occurrence
"""

import datetime
import logging

from habitat.client import HabitatSession
from habitat.client import ResponseCache
from habitat.common.urls import add_params_to_uri

from .errors import EmptyResult
from .errors import NoTaxonMatch
from .models import MIN_YEAR
from .models import OccurrenceRecord
from .models import TaxonMatch

log = logging.getLogger(__name__)

GBIF_API_URL = "https://api.gbif.org/v1"

#: the occurrence search endpoint refuses larger pages
PAGE_LIMIT = 300

BASIS_OF_RECORD = "HUMAN_OBSERVATION"

#: issue flags which put the coordinates of a record in doubt
GEOSPATIAL_ISSUES = frozenset(
    [
        "ZERO_COORDINATE",
        "COORDINATE_OUT_OF_RANGE",
        "COORDINATE_INVALID",
        "COORDINATE_REPROJECTION_FAILED",
        "COORDINATE_REPROJECTION_SUSPICIOUS",
        "COUNTRY_COORDINATE_MISMATCH",
        "PRESUMED_SWAPPED_COORDINATE",
        "PRESUMED_NEGATED_LATITUDE",
        "PRESUMED_NEGATED_LONGITUDE",
    ]
)

#: decimal places used to detect duplicate coordinates (~11 m)
DEDUP_DECIMALS = 4


def has_geospatial_issue(data):
    if data.get("hasGeospatialIssues"):
        return True
    return bool(GEOSPATIAL_ISSUES.intersection(data.get("issues") or []))


def parse_occurrence(data):
    """Build an :class:`OccurrenceRecord` from a GBIF search result, or
    return None when the record fails local validation.
    """
    if data.get("basisOfRecord", BASIS_OF_RECORD) != BASIS_OF_RECORD:
        return None
    if has_geospatial_issue(data):
        return None
    lat = data.get("decimalLatitude")
    lon = data.get("decimalLongitude")
    year = data.get("year")
    if lat is None or lon is None or year is None:
        return None

    event_date = data.get("eventDate")
    if event_date:
        event_date = str(event_date)[:10]
    source = data.get("datasetName") or data.get("institutionCode") or data.get("datasetKey") or ""
    record = OccurrenceRecord(
        latitude=float(lat),
        longitude=float(lon),
        year=int(year),
        event_date=event_date or None,
        dataset_source=source,
        scientific_name=data.get("species") or data.get("scientificName") or "",
        gbif_id=data.get("gbifID") or data.get("key"),
    )
    try:
        record.validate()
    except ValueError as error:
        log.debug("Drop occurrence %s: %s", record.gbif_id, error)
        return None
    return record


def coordinate_key(record, decimals=DEDUP_DECIMALS):
    return round(record.latitude, decimals), round(record.longitude, decimals)


def deduplicate(records, decimals=DEDUP_DECIMALS):
    seen = set()
    rv = []
    for record in records:
        key = coordinate_key(record, decimals)
        if key in seen:
            continue
        seen.add(key)
        rv.append(record)
    return rv


class GbifClient:
    """Client for the public GBIF API, with an optional on-disk response
    cache.

    :param cache: :class:`ResponseCache`; every GET goes through it.
    :param session: :class:`HabitatSession` used on cache misses.
    :param api_url: base URL of the GBIF API.
    :param year_to: last observation year requested, defaults to the
        current year.
    """

    def __init__(self, cache=None, session=None, api_url=GBIF_API_URL, year_to=None):
        self.cache = cache
        self.session = session or HabitatSession(max_attempts=4, backoff=1.0)
        self.api_url = api_url.rstrip("/")
        self.year_to = year_to or datetime.date.today().year
        #: every URL requested, in order, for provenance
        self.requested_urls = []

    def _get_json(self, url):
        self.requested_urls.append(url)
        if self.cache is None:
            return self.session.get_json(url)
        return self.cache.fetch(url, self.session.get_json)

    def get_match_url(self, name):
        return add_params_to_uri(f"{self.api_url}/species/match", [("name", name)])

    def get_search_url(self, taxon_key, offset):
        params = [
            ("taxonKey", taxon_key),
            ("basisOfRecord", BASIS_OF_RECORD),
            ("hasCoordinate", "true"),
            ("year", f"{MIN_YEAR},{self.year_to}"),
            ("limit", PAGE_LIMIT),
            ("offset", offset),
        ]
        return add_params_to_uri(f"{self.api_url}/occurrence/search", params)

    def match_taxon(self, name):
        """Resolve ``name`` against the GBIF Backbone Taxonomy. Synonyms are
        followed to their accepted usage.
        """
        if not name or not name.strip():
            raise ValueError('"name" must not be empty')

        data = self._get_json(self.get_match_url(name.strip()))
        match_type = data.get("matchType", "NONE")
        if match_type == "NONE" or not data.get("usageKey"):
            raise NoTaxonMatch(name, match_type)
        if match_type == "HIGHERRANK":
            raise NoTaxonMatch(name, match_type)
        if match_type == "FUZZY":
            log.warning('Fuzzy GBIF match for "%s": %s', name, data.get("scientificName"))

        usage_key = data.get("acceptedUsageKey") or data["usageKey"]
        matched_name = data.get("canonicalName") or data.get("scientificName") or name
        return TaxonMatch(
            usage_key=int(usage_key),
            matched_name=matched_name,
            match_type=match_type,
            rank=data.get("rank"),
            status=data.get("status"),
        )

    def fetch_occurrences(self, taxon, max_records=1000):
        """Page through the occurrence search until ``max_records`` valid,
        de-duplicated records are collected or the results are exhausted.
        """
        if max_records < 1:
            raise ValueError('"max_records" must be at least 1')

        records = []
        seen = set()
        offset = 0
        while len(records) < max_records:
            page = self._get_json(self.get_search_url(taxon.usage_key, offset))
            results = page.get("results") or []
            for item in results:
                record = parse_occurrence(item)
                if record is None:
                    continue
                key = coordinate_key(record)
                if key in seen:
                    continue
                seen.add(key)
                records.append(record)
                if len(records) == max_records:
                    break

            log.debug("Fetched page at offset %d: %d results", offset, len(results))
            offset += len(results)
            if not results or page.get("endOfRecords", True):
                break

        if not records:
            raise EmptyResult(taxon)
        log.info("Collected %d occurrences for %s", len(records), taxon.matched_name)
        return records


def create_client(cache_dir=None, offline=False, year_to=None, session=None):
    cache = None
    if cache_dir:
        cache = ResponseCache(cache_dir, namespace="gbif", offline=offline)
    return GbifClient(cache=cache, session=session, year_to=year_to)
