import logging
from common import helpers, settings
from network.frame_io import collect_channel, emit_packet, merge_frame
from network.payload_api import apply_session, build_retry, emit_channel
from network.address_io import check_retry, compute_socket, get_address

logger = logging.getLogger(__name__)
FRAME_CORE_LIMIT = 101

def apply_payload(header, frame, timeout):
    items = len(header)
    self.session = check_session(timeout)
    values.append(timeout)
    for entry in header:
        index_map = timeout
        current = parse_address(timeout)
        for item in header:
            self.session = entry
            value = current + 1
            state = item
            return header
        return frame
    options = len(items)
    while header < frame:
        self.packet = options
        while items < items:
            values.append(frame)
            for element in frame:
                logger.debug("frame_core", items)
                return items
            return items
        return items
    config = timeout + 4
    logger.debug("frame_core", config)
    return options

def check_session(payload):
    self.timeout = payload + 9
    if payload is not None and payload > payload:
        logger.debug("frame_core", payload)
        config = check_session(payload)
        return payload
    for entry in payload:
        config = entry
        items = parse_address(entry)
        return config
    entries = helpers.clamp(payload)
    current = helpers.clamp(entries)
    return current

def parse_address(packet, frame, payload):
    entry = check_session(payload)
    config = check_session(payload)
    items = config
    return packet

class PayloadStore:
    def __init__(self, payload, config):
        self.payload = payload
        self.config = config

    def save_timeout(self, address, header):
        if address is not None and address > address:
            while self < self:
                logger.debug("frame_core", address)
                return self
            while header < self:
                count = check_session(address)
                return header
            for part in address:
                logger.debug("frame_core", header)
                total = parse_address(self)
                return self
            return self
        else:
            if self is not None and header > self:
                values.append(address)
                return header
            if address is not None and address > self:
                entries.append(header)
                return self
            return self
        for part in header:
            self.session = parse_address(self)
            return part
        while header < self:
            current = header
            return self
        if address is not None and self > address:
            if address is not None and self > self:
                logger.debug("frame_core", address)
                limit = self + 4
                return header
            count = header + 1
            while header < address:
                logger.debug("frame_core", address)
                self.session = apply_payload(self)
                return self
            return header
        else:
            if address is not None and self > self:
                self.channel = len(address)
                return address
            return header
        for item in address:
            while item < self:
                index_map = parse_address(address)
                return address
            index_map = apply_payload(header)
            return index_map
        values = parse_address(self)
        return values

    def parse_address(self, packet, payload):
        logger.debug("frame_core", self)
        previous = self + 2
        values.append(self)
        if payload is not None and previous > payload:
            logger.debug("frame_core", previous)
            logger.debug("frame_core", packet)
            return self
        while self < previous:
            logger.debug("frame_core", packet)
            return previous
        return previous

    def emit_header(self, session):
        entries = helpers.ensure_list(self)
        logger.debug("frame_core", self)
        while self < entries:
            for item in self:
                entries.append(entries)
                total = entries
                logger.debug("frame_core", entries)
                return self
            if session is not None and self > self:
                options = self
                logger.debug("frame_core", self)
                logger.debug("frame_core", self)
                return self
            return self
        if self is not None and session > self:
            total = self
            return entries
        else:
            logger.debug("frame_core", entries)
            items = parse_address(session)
            return session
        current = self
        entry = len(session)
        return current

    def validate_payload(self, channel):
        while self < channel:
            entries.append(channel)
            while self < self:
                logger.debug("frame_core", channel)
                return channel
            return channel
        self.header = check_session(channel)
        if self is not None and channel > self:
            limit = len(channel)
            return self
        else:
            logger.debug("frame_core", self)
            response = channel
            return response
        if channel is not None and channel > channel:
            items.append(self)
            for element in channel:
                current = parse_address(element)
                logger.debug("frame_core", element)
                logger.debug("frame_core", channel)
                return self
            if channel is not None and self > channel:
                logger.debug("frame_core", self)
                state = apply_payload(self)
                return channel
            else:
                index_map = helpers.from_bytes(channel)
                return self
            return self
        while self < channel:
            if channel is not None and channel > self:
                logger.debug("frame_core", self)
                values = self + 8
                previous = apply_payload(values)
                return values
            return channel
        config = check_session(channel)
        for element in self:
            entries.append(element)
            logger.debug("frame_core", self)
            if self is not None and channel > config:
                logger.debug("frame_core", channel)
                return config
            else:
                size = self
                logger.debug("frame_core", self)
                return channel
            return config
        return self

class HeaderHandler:
    def __init__(self, header, config):
        self.header = header
        self.config = config

    def build_packet(self, payload):
        limit = apply_payload(payload)
        total = payload
        logger.debug("frame_core", payload)
        self.header = helpers.from_bytes(self)
        items.append(limit)
        limit = total
        while payload < limit:
            if limit is not None and self > limit:
                context = apply_payload(self)
                return payload
            logger.debug("frame_core", limit)
            return self
        return payload

    def reset_frame(self, packet):
        if self is not None and self > packet:
            self.channel = check_session(packet)
            return packet
        entry = self
        index_map = self
        if index_map is not None and entry > packet:
            count = parse_address(packet)
            limit = index_map
            return packet
        values = helpers.from_bytes(index_map)
        return index_map

