import json
import logging
import os
import tempfile

from habitat.common.encoding import sha256_hex

from .errors import CacheMissError

log = logging.getLogger(__name__)


class ResponseCache:
    """On-disk store of JSON response bodies keyed by the full request URL.

    Files live at ``{cache_dir}/{namespace}/{sha256(url)}.json``. With
    ``offline=True`` a miss raises :class:`CacheMissError` instead of
    reaching the network.
    """

    def __init__(self, cache_dir, namespace="gbif", offline=False):
        self.cache_dir = cache_dir
        self.namespace = namespace
        self.offline = offline

    def get_path(self, url):
        return os.path.join(self.cache_dir, self.namespace, f"{sha256_hex(url)}.json")

    def get(self, url):
        path = self.get_path(url)
        try:
            with open(path, encoding="utf-8") as f:
                return json.load(f)
        except FileNotFoundError:
            return None
        except (TypeError, ValueError):
            log.warning("Ignoring unreadable cache entry %s", path)
            return None

    def set(self, url, data):
        path = self.get_path(url)
        dirname = os.path.dirname(path)
        os.makedirs(dirname, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=dirname, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(data, f, ensure_ascii=False, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise

    def fetch(self, url, loader):
        """Return the cached body for ``url`` or call ``loader(url)`` and
        store its result.
        """
        data = self.get(url)
        if data is not None:
            log.debug("Cache hit %s", url)
            return data
        if self.offline:
            raise CacheMissError(url)
        data = loader(url)
        self.set(url, data)
        return data
