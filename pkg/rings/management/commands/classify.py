from rings.management.base import RingCommand


class Command(RingCommand):
    help = "List the local catalog rings with zp_k >= B_k(2;3) up to isomorphism and check the known lists."
    verb = "classify"
    takes_ring = False
    recordable = True
