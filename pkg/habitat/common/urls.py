"""habitat.common.urls.
~~~~~~~~~~~~~~~~~~~~~

Helpers for building GBIF, backend and LLM URLs. Parameter order is kept
as given so that equal queries produce equal cache keys.
"""

from urllib.parse import parse_qsl
from urllib.parse import urlencode
from urllib.parse import urlsplit
from urllib.parse import urlunsplit


def add_params_to_uri(uri, params):
    """Append ``params`` (a dict or a list of two-tuples) to the query of ``uri``."""
    if isinstance(params, dict):
        params = params.items()
    parts = urlsplit(uri)
    qs = parse_qsl(parts.query, keep_blank_values=True)
    qs.extend((k, str(v)) for k, v in params)
    return urlunsplit(parts._replace(query=urlencode(qs, safe=",")))


def join_url(base, path):
    return base.rstrip("/") + "/" + path.lstrip("/")


def query_params(url):
    """Return the query of ``url`` as a list of two-tuples."""
    return parse_qsl(urlsplit(url).query, keep_blank_values=True)
