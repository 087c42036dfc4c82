from habitat.common.errors import UpstreamDataError


class NetworkError(UpstreamDataError):
    error = "network_error"

    def __init__(self, url, reason=None, status_code=None):
        self.url = url
        self.status_code = status_code
        description = f"request to {url} failed"
        if reason:
            description += f": {reason}"
        super().__init__(description=description)


class CacheMissError(UpstreamDataError):
    error = "cache_miss"

    def __init__(self, url):
        self.url = url
        super().__init__(description=f"offline mode and no cached response for {url}")
