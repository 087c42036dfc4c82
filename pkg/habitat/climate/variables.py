"""WorldClim bioclimatic variable nomenclature."""

BIO_VARIABLES = [f"BIO{i}" for i in range(1, 20)]

BIO_LONG_NAMES = {
    "BIO1": "Annual Mean Temperature",
    "BIO2": "Mean Diurnal Range",
    "BIO3": "Isothermality",
    "BIO4": "Temperature Seasonality",
    "BIO5": "Max Temperature of Warmest Month",
    "BIO6": "Min Temperature of Coldest Month",
    "BIO7": "Temperature Annual Range",
    "BIO8": "Mean Temperature of Wettest Quarter",
    "BIO9": "Mean Temperature of Driest Quarter",
    "BIO10": "Mean Temperature of Warmest Quarter",
    "BIO11": "Mean Temperature of Coldest Quarter",
    "BIO12": "Annual Precipitation",
    "BIO13": "Precipitation of Wettest Month",
    "BIO14": "Precipitation of Driest Month",
    "BIO15": "Precipitation Seasonality",
    "BIO16": "Precipitation of Wettest Quarter",
    "BIO17": "Precipitation of Driest Quarter",
    "BIO18": "Precipitation of Warmest Quarter",
    "BIO19": "Precipitation of Coldest Quarter",
}

#: BIO1-BIO11 are temperature metrics, BIO12-BIO19 precipitation
BIO_UNITS = {
    name: ("°C" if i <= 11 else "mm") for i, name in enumerate(BIO_VARIABLES, 1)
}
BIO_UNITS["BIO3"] = "%"
BIO_UNITS["BIO4"] = "°C×100"
BIO_UNITS["BIO15"] = "CV"


def normalize_variable(name):
    """Accept ``bio11``, ``BIO 11`` or ``BIO11`` and return ``BIO11``."""
    key = str(name).replace(" ", "").upper()
    if key not in BIO_LONG_NAMES:
        raise KeyError(name)
    return key


def long_name(name):
    return BIO_LONG_NAMES[normalize_variable(name)]
