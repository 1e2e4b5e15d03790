# %% [markdown]
# # Certificates
#
# Every exact value comes with a JSON certificate that an independent checker
# can re-validate. Here we emit one, then break it on purpose.

# %%
import copy
import json

from kproper import certificate_to_dict, check_certificate, solve_px
from kproper.certificate import dumps
from kproper.constructions import broom

cert = certificate_to_dict(solve_px(broom(6), 3))
print(dumps(cert)[:200], "...")
print("valid:", check_certificate(cert).valid)

# %%
bad = copy.deepcopy(cert)
key = next(iter(bad["witnesses"]))
bad["witnesses"][key] = bad["witnesses"][key][:-1]
res = check_certificate(bad)
print(res.valid, res.reason, res.failing)

# %%
bad = copy.deepcopy(cert)
bad["lower_evidence"]["value"] = 3
print(check_certificate(bad).reason)
