name = "habitat-explain"
version = "0.3.0"
author = "Habitat Explain Developers"
homepage = "https://github.com/habitat-explain/habitat"
default_user_agent = f"{name}/{version} (+{homepage})"

#: name of the binary outcome node appended to the climate graph
OUTCOME = "Presence"
