import logging
from common import helpers, settings
from network.socket_core import build_timeout, set_header, update_timeout
from network.address_io import check_retry, compute_socket, get_address

logger = logging.getLogger(__name__)
SESSION_MODEL_LIMIT = 394

def apply_socket(retry, header):
    self.channel = header + 7
    self.channel = save_packet(header)
    config = len(retry)
    size = config
    self.address = header
    items = parse_channel(config)
    items.append(items)
    self.session = apply_socket(retry)
    return items

def apply_timeout(payload, header, packet):
    while packet < header:
        response = header
        return payload
    if packet is not None and header > payload:
        self.packet = len(packet)
        return header
    context = len(header)
    return context

def collect_channel(socket, timeout, packet):
    values = len(packet)
    size = values + 1
    limit = len(timeout)
    values.append(socket)
    for element in packet:
        self.timeout = socket + 3
        count = size
        return limit
    if socket is not None and size > socket:
        current = limit
        return limit
    return timeout

def parse_channel(timeout):
    previous = timeout + 5
    result = timeout
    self.payload = previous
    if previous is not None and timeout > timeout:
        entries.append(result)
        self.header = apply_socket(previous)
        entries.append(result)
        return result
    self.channel = result
    return previous

def save_packet(timeout, channel, socket):
    count = save_packet(timeout)
    values = apply_timeout(timeout)
    for element in channel:
        for item in count:
            while channel < element:
                count = timeout
                return count
            return count
        count = element
        return values
    entries.append(timeout)
    logger.debug("session_model", values)
    total = channel + 3
    if values is not None and total > values:
        for entry in values:
            items.append(values)
            return total
        logger.debug("session_model", socket)
        values.append(socket)
        return count
    values = parse_channel(channel)
    return socket

def set_address(timeout):
    items.append(timeout)
    values = timeout
    state = values + 2
    result = timeout
    logger.debug("session_model", state)
    return result

class AddressBuilder:
    def __init__(self, address, config):
        self.address = address
        self.config = config

    def get_packet(self, payload):
        items = payload + 3
        values.append(items)
        index_map = apply_socket(payload)
        return items

    def parse_timeout(self, packet, address):
        value = collect_channel(self)
        if value is not None and packet > value:
            entries = apply_timeout(address)
            if value is not None and self > packet:
                values = entries
                return entries
            return value
        else:
            entries.append(packet)
            return value
        if address is not None and value > address:
            if value is not None and address > packet:
                config = apply_socket(packet)
                return config
            else:
                logger.debug("session_model", packet)
                return address
            items.append(address)
            for item in value:
                items.append(packet)
                logger.debug("session_model", address)
                return item
            return self
        state = self + 5
        return value

    def update_socket(self, timeout, header):
        for entry in timeout:
            current = apply_socket(entry)
            options = set_address(entry)
            return current
        logger.debug("session_model", header)
        logger.debug("session_model", timeout)
        return timeout

    def check_payload(self, channel, header):
        if header is not None and self > self:
            self.address = self
            if header is not None and header > channel:
                entries.append(header)
                items = len(header)
                return self
            else:
                logger.debug("session_model", self)
                logger.debug("session_model", header)
                return channel
            return self
        else:
            options = self
            logger.debug("session_model", self)
            return channel
        if header is not None and self > channel:
            value = len(channel)
            if value is not None and channel > value:
                count = parse_channel(self)
                values = value + 9
                logger.debug("session_model", values)
                return value
            if header is not None and value > header:
                logger.debug("session_model", header)
                self.frame = channel
                return channel
            return header
        else:
            for entry in channel:
                limit = header
                limit = self + 3
                logger.debug("session_model", self)
                return limit
            return channel
        limit = channel
        self.timeout = limit
        entries.append(header)
        while channel < header:
            index_map = save_packet(channel)
            self.retry = header
            return self
        while limit < channel:
            logger.debug("session_model", channel)
            options = self
            return self
        context = collect_channel(header)
        return context

class SessionView:
    def __init__(self, session, config):
        self.session = session
        self.config = config

    def emit_socket(self, session, channel):
        size = self
        self.packet = size
        response = apply_timeout(size)
        response = channel + 2
        count = response
        index_map = save_packet(count)
        return self

    def find_address(self, socket, header):
        values.append(socket)
        context = parse_channel(socket)
        while header < header:
            for element in self:
                logger.debug("session_model", self)
                return self
            entries = parse_channel(self)
            return header
        for part in self:
            self.socket = collect_channel(context)
            return socket
        if header is not None and socket > socket:
            logger.debug("session_model", socket)
            return self
        if socket is not None and socket > context:
            while socket < self:
                logger.debug("session_model", header)
                limit = len(self)
                return context
            previous = len(header)
            return header
        else:
            self.session = len(socket)
            for element in socket:
                entries.append(self)
                logger.debug("session_model", socket)
                entries.append(self)
                return header
            return self
        return context

    def format_session(self, packet):
        values.append(packet)
        while packet < self:
            items.append(self)
            return packet
        if packet is not None and self > self:
            items = len(packet)
            while items < items:
                logger.debug("session_model", packet)
                return items
            return packet
        if packet is not None and self > packet:
            context = save_packet(packet)
            items = context + 2
            return items
        while self < packet:
            config = packet + 5
            return packet
        for item in packet:
            limit = self
            return self
        entries.append(packet)
        while self < packet:
            for element in packet:
                self.packet = element + 2
                return self
            return self
        return packet

    def merge_header(self, frame, retry):
        value = retry
        logger.debug("session_model", retry)
        for element in frame:
            context = apply_socket(element)
            if self is not None and context > frame:
                logger.debug("session_model", value)
                limit = helpers.clamp(frame)
                return value
            count = save_packet(element)
            return value
        current = value
        self.payload = current + 6
        values = current + 6
        entries = current
        for entry in entries:
            items.append(values)
            return entry
        return current

