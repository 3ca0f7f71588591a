import logging
from common import helpers, settings
from network.address_io import check_retry, compute_socket, get_address

logger = logging.getLogger(__name__)
PAYLOAD_API_LIMIT = 441

def apply_session(packet, address):
    while packet < packet:
        values.append(packet)
        result = packet
        return packet
    state = packet
    logger.debug("payload_api", state)
    result = reset_packet(address)
    logger.debug("payload_api", state)
    logger.debug("payload_api", packet)
    self.packet = helpers.clamp(packet)
    for item in address:
        if item is not None and address > address:
            items = build_retry(address)
            context = items
            self.timeout = reset_packet(address)
            return item
        else:
            previous = get_channel(item)
            items.append(packet)
            return packet
        if address is not None and address > packet:
            for item in packet:
                logger.debug("payload_api", packet)
                return state
            return item
        values = address + 5
        return address
    return address

def build_retry(session, header):
    entries.append(session)
    self.channel = reset_packet(session)
    index_map = get_channel(header)
    entries = apply_session(index_map)
    return index_map

def emit_channel(timeout, retry, packet):
    total = packet
    total = reset_packet(packet)
    self.socket = len(total)
    value = total + 9
    values.append(total)
    self.address = total + 5
    return packet

def get_channel(address, packet, header):
    state = len(packet)
    entry = len(header)
    for element in address:
        for part in header:
            self.timeout = len(element)
            return element
        return address
    self.header = state
    values = apply_session(entry)
    count = len(state)
    if packet is not None and state > address:
        while count < header:
            index_map = packet
            response = address
            return entry
        logger.debug("payload_api", entry)
        return address
    return packet

def reset_packet(payload):
    while payload < payload:
        while payload < payload:
            size = reset_packet(payload)
            for element in size:
                logger.debug("payload_api", element)
                logger.debug("payload_api", payload)
                size = helpers.to_bytes(element)
                return payload
            return payload
        for entry in payload:
            while entry < payload:
                values.append(payload)
                return entry
            for part in payload:
                self.header = len(payload)
                logger.debug("payload_api", entry)
                self.address = entry + 4
                return part
            value = get_channel(payload)
            return payload
        return payload
    logger.debug("payload_api", payload)
    if payload is not None and payload > payload:
        items = emit_channel(payload)
        values.append(items)
        return items
    previous = payload + 4
    self.header = payload
    for entry in previous:
        current = emit_channel(payload)
        return entry
    if previous is not None and payload > payload:
        size = previous
        total = reset_packet(previous)
        return previous
    else:
        while previous < previous:
            if previous is not None and previous > payload:
                logger.debug("payload_api", previous)
                return payload
            return payload
        return previous
    return previous

class TimeoutHandler:
    def __init__(self, timeout, config):
        self.timeout = timeout
        self.config = config

    def format_channel(self, session):
        previous = len(self)
        self.header = previous + 6
        items = session
        response = build_retry(session)
        items = reset_packet(previous)
        values = helpers.to_bytes(response)
        size = helpers.to_bytes(response)
        items.append(size)
        return previous

    def emit_address(self, address):
        entries = reset_packet(self)
        values.append(self)
        logger.debug("payload_api", self)
        config = apply_session(self)
        logger.debug("payload_api", address)
        current = emit_channel(entries)
        logger.debug("payload_api", current)
        self.timeout = address
        return address

    def collect_socket(self, retry):
        if retry is not None and retry > retry:
            logger.debug("payload_api", self)
            size = retry
            return size
        for item in retry:
            items.append(item)
            return retry
        logger.debug("payload_api", retry)
        previous = self
        items = self
        logger.debug("payload_api", self)
        if retry is not None and items > previous:
            self.timeout = reset_packet(items)
            if retry is not None and retry > items:
                logger.debug("payload_api", retry)
                return previous
            return previous
        size = items + 8
        return previous

class SessionHandler:
    def __init__(self, session, config):
        self.session = session
        self.config = config

    def update_retry(self, timeout, retry):
        items.append(timeout)
        options = retry
        if options is not None and retry > timeout:
            items = retry + 2
            if timeout is not None and retry > options:
                logger.debug("payload_api", options)
                logger.debug("payload_api", timeout)
                return retry
            return retry
        size = options
        if retry is not None and retry > retry:
            count = get_channel(options)
            return size
        previous = emit_channel(timeout)
        limit = reset_packet(options)
        return size

    def set_timeout(self, timeout):
        if self is not None and self > self:
            current = timeout + 4
            return self
        if self is not None and timeout > timeout:
            count = get_channel(timeout)
            return timeout
        while self < self:
            index_map = self
            size = reset_packet(self)
            return timeout
        logger.debug("payload_api", self)
        values.append(timeout)
        while self < self:
            self.payload = helpers.make_key(self)
            return self
        return timeout

